#pragma once

#include "modp/integer_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace modp {

/// One irreducible Dynkin component, e.g. {'C', 2}.
struct DynkinComponent {
  char letter = 'A';
  int rank = 1;

  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

enum class LatticeChoice { SimplyConnected, Adjoint, Explicit };

/// Input presentation of a split reductive group.
///
/// For `Explicit`, `lattice_basis` lists the rows of a basis of the coweight
/// lattice X. The first `semisimple rank` coordinates of each row are taken
/// with respect to the fundamental coweights; any further columns span a
/// central torus on which every root vanishes.
struct CartanDatum {
  std::vector<DynkinComponent> components;
  LatticeChoice lattice = LatticeChoice::SimplyConnected;
  IntMatrix lattice_basis;

  /// "A2:sc", "C2xA1:ad", ... Explicit lattices render as "<type>:explicit".
  std::string canonical_string() const;
};

/// Parses preset strings such as "A1", "A2:sc", "G2:ad", "C2xA1:sc", and the
/// printed form of explicit lattices, "A1:explicit[1,1;-1,1]".
/// A missing suffix means simply-connected.
CartanDatum parse_cartan_datum(const std::string& text);

/// Parses {"type": "C2", "lattice_basis": [[...], ...]}.
CartanDatum parse_cartan_datum_json(const std::string& json_text);

/// Element of the finite Weyl group, stored as its integer matrix acting on
/// coweight coordinates (column vectors in the basis of X).
struct FiniteWeylElement {
  IntMatrix matrix;

  friend bool operator==(const FiniteWeylElement&, const FiniteWeylElement&) = default;
  friend auto operator<=>(const FiniteWeylElement& a, const FiniteWeylElement& b) {
    return a.matrix <=> b.matrix;
  }
};

struct Root {
  IntVec simple_coefficients;  // in the basis of simple roots
  IntVec dual;                 // pairing functional on X: <root, v> = dual . v
  IntVec coroot;               // coroot in X coordinates
  int height = 0;
  bool positive = false;
};

/// Root datum of a split reductive group with a chosen coweight lattice.
/// Immutable after construction.
class RootDatum {
 public:
  explicit RootDatum(const CartanDatum& cartan);

  const CartanDatum& cartan_datum() const { return cartan_; }
  std::string canonical_string() const { return cartan_.canonical_string(); }

  /// Number of simple roots.
  int semisimple_rank() const { return rank_; }
  /// Rank of the coweight lattice X.
  int lattice_rank() const { return dim_; }
  int central_rank() const { return dim_ - rank_; }

  /// cartan_matrix()(i, j) = <alpha_j, alpha_i^vee>, indices 0-based.
  const IntMatrix& cartan_matrix() const { return cartan_matrix_; }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<int>& positive_roots() const { return positive_; }
  /// Index into roots() of the i-th simple root (0-based i).
  int simple_root(int i) const { return simple_index_[static_cast<std::size_t>(i)]; }
  const IntVec& simple_coroot(int i) const { return roots_[static_cast<std::size_t>(simple_root(i))].coroot; }
  /// Index of the root with the given coroot, or -1.
  int root_by_coroot(const IntVec& coroot) const;
  /// Index of the root whose pairing functional is `dual`, or -1.
  int root_by_dual(const IntVec& dual) const;
  /// Index of u^{-1}(root), computed through the pairing functional.
  int apply_inverse_to_root(const FiniteWeylElement& u, int root) const;
  int negative_of(int root) const;

  /// Component index (into cartan_datum().components) of each simple root.
  int component_of_simple(int i) const { return simple_component_[static_cast<std::size_t>(i)]; }
  /// First simple-root index of component c.
  int component_offset(int c) const { return component_offset_[static_cast<std::size_t>(c)]; }
  int num_components() const { return static_cast<int>(cartan_.components.size()); }
  /// Highest root of component c.
  int highest_root(int c) const { return highest_[static_cast<std::size_t>(c)]; }

  Int pair(int root, const IntVec& coweight) const;
  /// Coordinates of the i-th fundamental coweight scaled to be integral is
  /// not always possible; this returns it over the rationals in X coordinates.
  std::vector<Rational> fundamental_coweight(int i) const;

  bool is_antidominant(const IntVec& coweight) const;
  /// Returns (z, u) with z anti-dominant and u(coweight) = z.
  std::pair<IntVec, FiniteWeylElement> antidominant_representative(const IntVec& coweight) const;

  /// Class of a coweight in X / Q^vee. The zero vector is the identity class.
  IntVec fundamental_group_class(const IntVec& coweight) const;
  /// Order of X / Q^vee; nullopt when a central torus makes it infinite.
  std::optional<Int> fundamental_group_order() const;
  /// One coweight per class of X / Q^vee (finite case only).
  std::vector<IntVec> fundamental_group_representatives() const;

  // Finite Weyl group.
  FiniteWeylElement finite_identity() const;
  const FiniteWeylElement& finite_simple_reflection(int i) const { return simple_reflections_[static_cast<std::size_t>(i)]; }
  FiniteWeylElement reflection(int root) const;
  FiniteWeylElement multiply(const FiniteWeylElement& a, const FiniteWeylElement& b) const;
  FiniteWeylElement inverse(const FiniteWeylElement& u) const;
  IntVec apply(const FiniteWeylElement& u, const IntVec& coweight) const { return u.matrix.apply(coweight); }
  int apply_to_root(const FiniteWeylElement& u, int root) const;
  /// Number of positive roots sent to negative roots.
  int length(const FiniteWeylElement& u) const;
  /// Reduced word in 1-based finite simple indices, smallest left descent first.
  std::vector<int> reduced_word(const FiniteWeylElement& u) const;
  FiniteWeylElement from_word(const std::vector<int>& word) const;
  /// |W_0| from the classification.
  Int weyl_group_order() const;
  /// All elements of W_0 (guarded by `cap`).
  std::vector<FiniteWeylElement> weyl_group_elements(std::size_t cap = 100000) const;

 private:
  CartanDatum cartan_;
  int rank_ = 0;
  int dim_ = 0;
  IntMatrix cartan_matrix_;
  IntMatrix basis_;  // rows of X in fundamental-coweight (+ central) coordinates
  std::vector<Root> roots_;
  std::vector<int> positive_;
  std::vector<int> simple_index_;
  std::vector<int> simple_component_;
  std::vector<int> component_offset_;
  std::vector<int> highest_;
  std::vector<int> negative_;
  std::vector<FiniteWeylElement> simple_reflections_;
  std::unordered_map<IntVec, int, IntVecHash> by_coroot_;
  std::unordered_map<IntVec, int, IntVecHash> by_dual_;
  SmithForm pi1_;
};

/// Cartan matrix of one irreducible type in the convention
/// (i, j) -> <alpha_j, alpha_i^vee>. Throws InvalidInput on bad types.
IntMatrix cartan_matrix_of(const DynkinComponent& c);

}  // namespace modp
