#include "modp/cli.hpp"

#include "modp/cache.hpp"
#include "modp/errors.hpp"
#include "modp/format.hpp"
#include "modp/hecke.hpp"
#include "modp/oracle.hpp"
#include "modp/satake.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace modp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string cache_dir;
  std::string format;
  std::size_t interval_cap = kDefaultIntervalCap;

  std::string datum;
  std::string facet;
  std::string levi;
  std::string lambda;
  Int p = 2;

  std::string elt;
  std::string u;
  std::string w;
  std::string word;

  std::string w1;
  std::string w2;
  bool witness = false;
  std::string witness_file;
  std::string from = "phi";
  std::string to = "indicator";
  std::string product_basis = "phi";

  bool special = false;
  bool list_lambda_minus = false;
  int length_cap = 8;

  int len = 6;
  std::string datums = "A1,A2,C2";
  int max_length = 4;
};

struct Session {
  Options opt;
  std::unique_ptr<CLI::App> app;
  std::vector<std::string> leaf;  // names of the selected subcommand chain
};

std::string config_value(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += config_value(v[i]);
    }
    return s;
  }
  return v.dump();
}

/// Flat JSON config. Keys name long flags (underscores allowed) or the
/// positional "datum"; they apply to the selected subcommand unless the
/// root owns the flag. Keys for other subcommands are ignored.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}\n"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    std::vector<std::string> chain;
    for (const CLI::App* a = root_;;) {
      auto subs = a->get_subcommands();
      if (subs.empty()) break;
      a = subs.front();
      chain.push_back(a->get_name());
    }
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      std::replace(item.name.begin(), item.name.end(), '_', '-');
      if (!root_->get_option_no_throw("--" + item.name)) item.parents = chain;
      if (value.is_boolean()) item.inputs = {value.get<bool>() ? "true" : "false"};
      else item.inputs = {config_value(value)};
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  const CLI::App* root_;
};

void add_datum(CLI::App* c, Options& o) {
  c->add_option("datum", o.datum, "root datum: A2, C2:ad, A1:explicit[1,1;-1,1], a JSON object or a .json file")->required();
}

void add_facet(CLI::App* c, Options& o) {
  c->add_option("--facet", o.facet, "affine simple indices of the facet; empty for Iwahori");
}

void add_prime(CLI::App* c, Options& o) { c->add_option("--p", o.p, "coefficient prime"); }

std::unique_ptr<CLI::App> build_app(Options& o) {
  auto app = std::make_unique<CLI::App>("Mod p parahoric Hecke algebras, Demazure products and Satake transforms", "modp_hecke");
  app->fallthrough();
  app->require_subcommand(1);
  app->allow_config_extras(CLI::config_extras_mode::ignore);
  app->config_formatter(std::make_shared<JsonConfig>(app.get()));
  app->set_config("--config", "", "JSON file whose keys mirror the long flags");
  app->add_option("--cache-dir", o.cache_dir, "interval cache directory (default from MODP_HECKE_CACHE_DIR)");
  app->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--interval-cap", o.interval_cap, "largest Bruhat interval enumerated")->check(CLI::PositiveNumber);

  auto* weyl = app->add_subcommand("weyl", "affine Weyl group computations");
  weyl->require_subcommand(1);
  auto* reduce = weyl->add_subcommand("reduce", "reduced word with the length-zero part on the right");
  add_datum(reduce, o);
  reduce->add_option("--elt", o.elt, "element")->required();
  auto* length = weyl->add_subcommand("length", "length of an element");
  add_datum(length, o);
  length->add_option("--elt", o.elt, "element")->required();
  auto* leq = weyl->add_subcommand("leq", "Bruhat comparison u <= w");
  add_datum(leq, o);
  leq->add_option("--u", o.u)->required();
  leq->add_option("--w", o.w)->required();
  auto* dem = weyl->add_subcommand("demazure", "Demazure product of a word");
  add_datum(dem, o);
  dem->add_option("--word", o.word, "comma separated affine simple indices")->required();
  auto* rep = weyl->add_subcommand("rep", "canonical double coset representative");
  add_datum(rep, o);
  add_facet(rep, o);
  rep->add_option("--elt", o.elt, "element")->required();

  auto* hecke = app->add_subcommand("hecke", "mod p Hecke algebra");
  hecke->require_subcommand(1);
  auto* mul = hecke->add_subcommand("multiply", "phi_{w1} * phi_{w2}");
  add_datum(mul, o);
  add_facet(mul, o);
  add_prime(mul, o);
  mul->add_option("--w1", o.w1)->required();
  mul->add_option("--w2", o.w2)->required();
  mul->add_flag("--witness", o.witness, "include the convolution witness");
  mul->add_option("--to", o.product_basis, "basis of the printed product")->check(CLI::IsMember({"phi", "indicator"}));
  auto* replay = hecke->add_subcommand("replay", "recompute a product from its witness");
  replay->add_option("--witness-file", o.witness_file, "output of multiply --witness")->required();
  auto* basis = hecke->add_subcommand("basis", "change of basis of a single basis element");
  add_datum(basis, o);
  add_facet(basis, o);
  add_prime(basis, o);
  basis->add_option("--w", o.w)->required();
  basis->add_option("--from", o.from)->check(CLI::IsMember({"phi", "indicator"}));
  basis->add_option("--to", o.to)->check(CLI::IsMember({"phi", "indicator"}));
  auto* pc = hecke->add_subcommand("pointcount", "point count polynomial of a Schubert variety");
  add_datum(pc, o);
  add_facet(pc, o);
  pc->add_option("--w", o.w)->required();

  auto* satake = app->add_subcommand("satake", "Satake transform of phi_w");
  add_datum(satake, o);
  add_facet(satake, o);
  add_prime(satake, o);
  satake->add_option("--levi", o.levi, "finite simple indices (1-based) of the Levi; empty for the torus");
  satake->add_option("--lambda", o.lambda, "cocharacter of the Levi in X coordinates");
  satake->add_option("--w", o.w, "element");
  satake->add_flag("--special", o.special, "use the anti-dominant fast path (special facet, torus)");
  satake->add_flag("--list-lambda-minus", o.list_lambda_minus, "list anti-dominant z with l(t_z) <= --cap");
  satake->add_option("--cap", o.length_cap, "length cap for --list-lambda-minus")->check(CLI::NonNegativeNumber);

  auto* cache = app->add_subcommand("cache", "interval cache administration");
  cache->require_subcommand(1);
  cache->add_subcommand("stats", "entry count and hit rate");
  cache->add_subcommand("clear", "remove all entries");
  auto* warm = cache->add_subcommand("warm", "precompute lower intervals");
  add_datum(warm, o);
  add_facet(warm, o);
  warm->add_option("--len", o.len, "length bound")->check(CLI::NonNegativeNumber);

  auto* orc = app->add_subcommand("oracle", "brute force cross-validation");
  orc->require_subcommand(1);
  auto* check = orc->add_subcommand("check", "run the cross-validation suite");
  check->add_option("--datums", o.datums, "comma separated data");
  check->add_option("--len", o.max_length, "length bound")->check(CLI::NonNegativeNumber);
  return app;
}

std::vector<CLI::App*> selected_chain(CLI::App* app) {
  std::vector<CLI::App*> chain;
  for (CLI::App* a = app;;) {
    auto subs = a->get_subcommands();
    if (subs.empty()) break;
    a = subs.front();
    chain.push_back(a);
  }
  return chain;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void parse_session(Session& s, const std::vector<std::string>& args) {
  s.app = build_app(s.opt);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  s.app->parse(rev);
  for (CLI::App* a : selected_chain(s.app.get())) s.leaf.push_back(a->get_name());
}

RootDatum load_datum(const std::string& text) {
  if (!text.empty() && text.front() == '{') return RootDatum(parse_cartan_datum_json(text));
  if (text.size() > 5 && text.substr(text.size() - 5) == ".json") return RootDatum(parse_cartan_datum_json(read_file(text)));
  return RootDatum(parse_cartan_datum(text));
}

std::string cache_dir(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv(kCacheDirEnv)) return env;
  return {};
}

bool want_json(const Options& o, bool default_json) {
  if (o.format.empty()) return default_json;
  return o.format == "json";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json index_list_json(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json int_list_json(const IntVec& v) {
  Json a = Json::array();
  for (Int x : v) a.push_back(x);
  return a;
}

/// Terms sorted by (length, element) for stable, readable output.
template <class Map>
std::vector<std::pair<AffineWeylElement, Int>> sorted_terms(const AffineWeylGroup& g, const Map& terms) {
  std::vector<std::pair<AffineWeylElement, Int>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return g.length(a.first) < g.length(b.first); });
  return v;
}

Json hecke_json(const AffineWeylGroup& g, const HeckeElement& a) {
  Json j;
  j["datum"] = g.datum().canonical_string();
  j["facet"] = index_list_json(a.facet);
  j["prime"] = a.prime;
  j["basis"] = to_string(a.basis);
  j["terms"] = Json::array();
  for (const auto& [w, c] : sorted_terms(g, a.terms)) j["terms"].push_back(Json{{"rep", format_element(g, w)}, {"coeff", c}});
  return j;
}

std::string hecke_text(const AffineWeylGroup& g, const HeckeElement& a) {
  if (a.is_zero()) return "0";
  const std::string sym = a.basis == HeckeBasis::Phi ? "phi" : "1";
  std::string s;
  for (const auto& [w, c] : sorted_terms(g, a.terms)) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += sym + "[" + format_element(g, w) + "]";
  }
  return s;
}

void emit_hecke(std::ostream& out, const Options& o, const HeckeAlgebra& h, const HeckeElement& a, const Json& extra = Json()) {
  const AffineWeylGroup& g = h.group();
  if (want_json(o, true)) {
    Json j = hecke_json(g, a);
    for (const auto& [k, v] : extra.items()) j[k] = v;
    emit(out, j);
    return;
  }
  out << "phi: " << hecke_text(g, h.to_basis(a, HeckeBasis::Phi)) << '\n';
  out << "indicator: " << hecke_text(g, h.to_basis(a, HeckeBasis::Indicator)) << '\n';
}

Json witness_json(const AffineWeylGroup& g, const ConvolutionWitness& w) {
  Json j;
  j["w1"] = format_element(g, w.w1);
  j["w2"] = format_element(g, w.w2);
  j["tau1"] = format_element(g, w.tau1);
  j["word1"] = index_list_json(w.word1);
  j["word2"] = index_list_json(w.word2);
  j["tau2"] = format_element(g, w.tau2);
  j["demazure"] = format_element(g, w.demazure);
  j["result"] = format_element(g, w.result);
  return j;
}

/// Group, facet and Hecke algebra for a command, with the disk cache attached.
struct Context {
  Context(const Options& o, const std::string& datum_text, const std::string& facet_text, Int prime)
      : group(load_datum(datum_text)), hecke(group, group.make_facet(parse_index_list(facet_text)), prime, o.interval_cap) {
    if (const std::string dir = cache_dir(o); !dir.empty()) {
      store = std::make_unique<DiskIntervalStore>(dir, group);
      hecke.set_store(store.get());
    }
  }
  AffineWeylElement el(const std::string& text) const { return parse_element(group, text); }

  AffineWeylGroup group;
  HeckeAlgebra hecke;
  std::unique_ptr<DiskIntervalStore> store;
};

int cmd_weyl(const Session& s, std::ostream& out) {
  const Options& o = s.opt;
  const std::string& sub = s.leaf.at(1);
  AffineWeylGroup g(load_datum(o.datum));
  const bool js = want_json(o, false);
  Json j;
  j["datum"] = g.datum().canonical_string();
  if (sub == "reduce") {
    const auto w = parse_element(g, o.elt);
    const RightOmegaWord rw = g.reduced_word(w);
    if (!js) {
      out << format_word(g, w) << '\n';
      return 0;
    }
    j["element"] = format_element(g, w);
    j["word"] = index_list_json(rw.word);
    j["tau"] = format_element(g, rw.tau);
    j["length"] = g.length(w);
    j["reduced"] = format_word(g, w);
  } else if (sub == "length") {
    const auto w = parse_element(g, o.elt);
    if (!js) {
      out << g.length(w) << '\n';
      return 0;
    }
    j["element"] = format_element(g, w);
    j["length"] = g.length(w);
  } else if (sub == "leq") {
    const auto u = parse_element(g, o.u);
    const auto w = parse_element(g, o.w);
    const bool r = g.bruhat_leq(u, w);
    if (!js) {
      out << (r ? "true" : "false") << '\n';
      return 0;
    }
    j["u"] = format_element(g, u);
    j["w"] = format_element(g, w);
    j["leq"] = r;
  } else if (sub == "demazure") {
    const auto word = parse_index_list(o.word);
    for (int i : word)
      if (i < 0 || i >= g.num_simple()) throw ParseError("word letter out of range: " + std::to_string(i));
    const auto d = g.demazure_product(word);
    if (!js) {
      out << format_word(g, d) << '\n';
      return 0;
    }
    j["word"] = index_list_json(word);
    j["result"] = format_element(g, d);
    j["reduced"] = format_word(g, d);
  } else {
    const Facet f = g.make_facet(parse_index_list(o.facet));
    const auto rep = g.double_coset_rep(parse_element(g, o.elt), f);
    if (!js) {
      out << format_element(g, rep) << '\n';
      return 0;
    }
    j["facet"] = index_list_json(f.indices);
    j["rep"] = format_element(g, rep);
    j["length"] = g.length(rep);
  }
  emit(out, j);
  return 0;
}

int cmd_hecke_replay(const Session& s, std::ostream& out) {
  const Options& o = s.opt;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(o.witness_file));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("witness file: " + std::string(e.what()));
  }
  try {
    const auto& wj = doc.contains("witness") ? doc.at("witness") : doc;
    std::string facet;
    for (const auto& x : doc.at("facet")) facet += (facet.empty() ? "" : ",") + std::to_string(x.get<int>());
    Context c(o, doc.at("datum").get<std::string>(), facet, doc.at("prime").get<Int>());
    const AffineWeylGroup& g = c.group;
    ConvolutionWitness w;
    w.w1 = c.el(wj.at("w1").get<std::string>());
    w.w2 = c.el(wj.at("w2").get<std::string>());
    w.tau1 = c.el(wj.at("tau1").get<std::string>());
    w.word1 = wj.at("word1").get<std::vector<int>>();
    w.word2 = wj.at("word2").get<std::vector<int>>();
    w.tau2 = c.el(wj.at("tau2").get<std::string>());
    for (const auto& word : {w.word1, w.word2})
      for (int i : word)
        if (i < 0 || i >= g.num_simple()) throw ParseError("witness word letter out of range");
    if (g.multiply(w.tau1, g.from_word(w.word1)) != w.w1 || g.multiply(g.from_word(w.word2), w.tau2) != w.w2)
      throw PreconditionError("witness words do not multiply to its operands");
    w.result = c.hecke.replay(w);
    std::vector<int> word = w.word1;
    word.insert(word.end(), w.word2.begin(), w.word2.end());
    w.demazure = g.multiply(g.multiply(w.tau1, g.demazure_product(word)), w.tau2);
    if (wj.contains("result") && c.el(wj.at("result").get<std::string>()) != w.result)
      throw PreconditionError("witness replays to " + format_element(g, w.result) + ", not the recorded result");
    const HeckeBasis basis = parse_basis(doc.value("basis", std::string("phi")));
    emit_hecke(out, o, c.hecke, c.hecke.to_basis(c.hecke.phi(w.result), basis), Json{{"witness", witness_json(g, w)}});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("witness file: " + std::string(e.what()));
  }
  return 0;
}

int cmd_hecke(const Session& s, std::ostream& out) {
  const Options& o = s.opt;
  const std::string& sub = s.leaf.at(1);
  if (sub == "replay") return cmd_hecke_replay(s, out);
  if (sub == "pointcount") {
    Context c(o, o.datum, o.facet, 2);
    const auto rep = c.hecke.canonical(c.el(o.w));
    const Polynomial p = c.hecke.point_count(rep);
    if (!want_json(o, false)) {
      out << p.to_string() << '\n';
      return 0;
    }
    Json j;
    j["datum"] = c.group.datum().canonical_string();
    j["facet"] = index_list_json(c.hecke.facet().indices);
    j["rep"] = format_element(c.group, rep);
    j["polynomial"] = p.to_string();
    j["coefficients"] = int_list_json(p.coefficients());
    emit(out, j);
    return 0;
  }
  Context c(o, o.datum, o.facet, o.p);
  if (sub == "multiply") {
    const auto [result, wit] = c.hecke.convolve_phi_classes(c.el(o.w1), c.el(o.w2));
    const HeckeElement prod = c.hecke.to_basis(c.hecke.phi(result), parse_basis(o.product_basis));
    Json extra;
    if (o.witness) extra["witness"] = witness_json(c.group, wit);
    emit_hecke(out, o, c.hecke, prod, extra);
    return 0;
  }
  const HeckeElement a = parse_basis(o.from) == HeckeBasis::Phi ? c.hecke.phi(c.el(o.w)) : c.hecke.indicator(c.el(o.w));
  emit_hecke(out, o, c.hecke, c.hecke.to_basis(a, parse_basis(o.to)));
  return 0;
}

std::string monoid_text(const MonoidAlgebraElement& m) {
  if (m.is_zero()) return "0";
  std::string s;
  for (const auto& [z, c] : m.terms) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += "e^{t[" + format_int_list(z) + "]}";
  }
  return s;
}

Json monoid_json(const MonoidAlgebraElement& m) {
  Json a = Json::array();
  for (const auto& [z, c] : m.terms) a.push_back(Json{{"z", int_list_json(z)}, {"coeff", c}});
  return a;
}

int cmd_satake(const Session& s, std::ostream& out) {
  const Options& o = s.opt;
  Context c(o, o.datum, o.facet, o.p);
  const AffineWeylGroup& g = c.group;
  const bool js = want_json(o, true);

  if (o.list_lambda_minus) {
    if (!g.is_special(c.hecke.facet())) throw PreconditionError("Lambda_- needs a special facet");
    const auto entries = enumerate_antidominant(g, o.length_cap);
    if (!js) {
      out << "z\tlength\n";
      for (const auto& e : entries) out << "[" << format_int_list(e.z) << "]\t" << e.length << '\n';
      return 0;
    }
    Json j;
    j["datum"] = g.datum().canonical_string();
    j["facet"] = index_list_json(c.hecke.facet().indices);
    j["cap"] = o.length_cap;
    j["entries"] = Json::array();
    for (const auto& e : entries)
      j["entries"].push_back(Json{{"z", int_list_json(e.z)}, {"length", e.length}, {"rep", format_element(g, c.hecke.canonical(g.translation(e.z)))}});
    emit(out, j);
    return 0;
  }

  if (o.w.empty()) throw ParseError("satake needs --w (or --list-lambda-minus)");
  std::optional<IntVec> lambda;
  if (!o.lambda.empty()) lambda = parse_int_list(o.lambda);
  SatakeContext ctx(c.hecke, LeviDatum(g.datum(), parse_index_list(o.levi), lambda));
  const auto rep = c.hecke.canonical(c.el(o.w));

  Json j;
  j["datum"] = g.datum().canonical_string();
  j["facet"] = index_list_json(c.hecke.facet().indices);
  j["levi"] = index_list_json(ctx.levi().indices());
  j["lambda"] = int_list_json(ctx.levi().lambda());
  j["prime"] = c.hecke.prime();
  j["w"] = format_element(g, rep);
  std::string text;
  if (o.special) {
    if (!g.is_special(c.hecke.facet())) throw PreconditionError("--special needs a special facet");
    if (!ctx.levi().is_minimal()) throw PreconditionError("--special needs the minimal Levi (--levi \"\")");
    const MonoidAlgebraElement m = ctx.special_satake_phi(rep);
    j["closed_component"] = nullptr;
    j["has_levi_point"] = true;
    j["image"] = Json::array();
    for (const auto& [z, k] : m.terms) j["image"].push_back(Json{{"rep", format_element(g, g.translation(z))}, {"coeff", k}});
    j["monoid"] = monoid_json(m);
    text = monoid_text(m);
  } else {
    const auto label = ctx.closed_attractor_component(rep);
    const LeviHeckeElement image = ctx.satake_phi(rep);
    j["closed_component"] = format_element(g, label);
    j["has_levi_point"] = ctx.has_levi_point(label);
    j["image"] = Json::array();
    for (const auto& [y, k] : sorted_terms(g, image.terms)) j["image"].push_back(Json{{"rep", format_element(g, y)}, {"coeff", k}});
    if (ctx.levi().is_minimal()) {
      const MonoidAlgebraElement m = ctx.to_monoid(image);
      j["monoid"] = monoid_json(m);
      text = monoid_text(m);
    } else if (image.is_zero()) {
      text = "0";
    } else {
      for (const auto& [y, k] : sorted_terms(g, image.terms)) {
        if (!text.empty()) text += " + ";
        if (k != 1) text += std::to_string(k) + "*";
        text += "1_M[" + format_element(g, y) + "]";
      }
    }
  }
  j["image_text"] = text;
  if (js) emit(out, j);
  else out << text << '\n';
  return 0;
}

int cmd_cache(const Session& s, std::ostream& out) {
  const Options& o = s.opt;
  const std::string& sub = s.leaf.at(1);
  const std::string dir = cache_dir(o);
  if (dir.empty()) throw ParseError(std::string("cache commands need --cache-dir or ") + kCacheDirEnv);
  const bool js = want_json(o, false);
  Json j;
  j["cache_dir"] = dir;
  if (sub == "warm") {
    Context c(o, o.datum, o.facet, 2);
    const auto reps = c.group.double_coset_reps_up_to_length(c.hecke.facet(), o.len);
    for (const auto& r : reps) c.hecke.interval(r);
    c.store->flush();
    j["datum"] = c.group.datum().canonical_string();
    j["facet"] = index_list_json(c.hecke.facet().indices);
    j["len"] = o.len;
    j["classes"] = reps.size();
    j["entries"] = c.store->entry_count();
  } else {
    // The group only matters for decoding entries, which stats and clear never do.
    AffineWeylGroup dummy(RootDatum(parse_cartan_datum("A1")));
    DiskIntervalStore store(dir, dummy);
    if (sub == "clear") store.clear();
    const long long lookups = store.hits() + store.misses();
    j["entries"] = store.entry_count();
    j["hits"] = store.hits();
    j["misses"] = store.misses();
    j["hit_rate"] = lookups == 0 ? 0.0 : static_cast<double>(store.hits()) / static_cast<double>(lookups);
  }
  if (js) {
    emit(out, j);
    return 0;
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "cache_dir") continue;
    out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  return 0;
}

int cmd_oracle(const Session& s, std::ostream& out) {
  const Options& o = s.opt;
  std::vector<std::string> datums;
  std::stringstream ss(o.datums);
  for (std::string d; std::getline(ss, d, ',');)
    if (!d.empty()) datums.push_back(d);
  const auto rows = oracle::run_suite(datums, o.max_length);
  bool ok = true;
  Json j = Json::array();
  for (const auto& r : rows) {
    ok = ok && r.passed();
    j.push_back(Json{{"check", r.name}, {"datum", r.datum}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}});
  }
  if (want_json(o, false)) {
    emit(out, Json{{"len", o.max_length}, {"rows", j}, {"passed", ok}});
  } else {
    for (const auto& r : rows)
      out << (r.passed() ? "PASS" : "FAIL") << "  " << r.datum << "  " << r.name << "  (" << r.cases << " cases, " << r.failures
          << " failures)\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s;
  try {
    parse_session(s, args);
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << '\n';
    return 5;
  } catch (const CLI::ParseError& e) {
    const int code = s.app ? s.app->exit(e, out, err) : 2;
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }

  try {
    const std::string& top = s.leaf.at(0);
    if (top == "weyl") return cmd_weyl(s, out);
    if (top == "hecke") return cmd_hecke(s, out);
    if (top == "satake") return cmd_satake(s, out);
    if (top == "cache") return cmd_cache(s, out);
    return cmd_oracle(s, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace modp::cli
