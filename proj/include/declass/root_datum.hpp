#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "declass/gf.hpp"
#include "declass/rational.hpp"

namespace declass {

/// Field characteristic: zero or a prime.
class Characteristic {
 public:
  explicit Characteristic(std::uint64_t p);
  std::uint64_t value() const { return p_; }
  bool zero() const { return p_ == 0; }
  bool operator==(const Characteristic&) const = default;

 private:
  std::uint64_t p_;
};

/// Root datum in coordinates.  A basis of the cocharacter lattice is fixed
/// once; coroots are written in that basis and roots in the dual basis, so
/// the canonical pairing of a root with a coroot is the plain dot product.
struct RootDatum {
  std::string label;
  int rank = 0;
  std::vector<std::vector<long long>> roots;    // dual-basis coordinates
  std::vector<std::vector<long long>> coroots;  // cocharacter-basis coordinates
};

/// Throws parse_error naming the first violated invariant: aligned list
/// lengths, vectors of length rank, pairing <root_i, coroot_i> == 2, root
/// list closed under negation, no duplicate or zero roots.
void validate_root_datum(const RootDatum& rd);

// Built-in type A data.  All three builders list the roots in the same
// order: for i from 0 to n-1 and j from 0 to n-1 with j != i, the root
// attached to the pair (i, j); see type_a_root_index.
RootDatum build_gl(int n);   // rank n, roots e_i - e_j
RootDatum build_sl(int n);   // rank n-1, cocharacter basis e_k - e_{k+1}
RootDatum build_pgl(int n);  // rank n-1, cocharacter basis e_0..e_{n-2} mod the diagonal

/// Position of the pair (i, j) root inside the builders' root lists.
int type_a_root_index(int n, int i, int j);

/// Plain text form: LABEL / RANK / ROOTS / COROOTS sections, one integer row
/// per line.  format_root_datum emits a canonical form whose round trip
/// through load_root_datum is byte-exact.
RootDatum load_root_datum(const std::string& text);
std::string format_root_datum(const RootDatum& rd);

/// A Levi subgroup containing the maximal torus, described by the set of its
/// root indices (must be closed under negation).
struct LeviDescriptor {
  std::vector<int> root_indices;  // sorted, unique
};

void validate_levi(const RootDatum& rd, const LeviDescriptor& levi);
LeviDescriptor levi_full(const RootDatum& rd);
/// Block-diagonal Levi of a type A datum built from consecutive index blocks
/// of the given sizes; valid for any of build_gl/build_sl/build_pgl(n).
LeviDescriptor levi_from_blocks(int n, const std::vector<int>& block_sizes);

/// Linear subspace of the cocharacter space, cut out by integer functionals.
struct SubspaceDescriptor {
  int ambient_rank = 0;
  std::vector<std::vector<long long>> equations;
};

/// Roots whose differential vanishes at the point y, over Q when p == 0 and
/// over F_p otherwise; y is given in cocharacter coordinates with integer
/// entries.  Returns sorted root indices.
std::vector<int> phi_y(const RootDatum& rd, Characteristic p,
                       const std::vector<long long>& y);
/// Same computation at an exact rational point (characteristic zero).
std::vector<int> phi_y(const RootDatum& rd, const std::vector<Rational>& y);
/// Same computation at a point with coordinates in a finite field F_{p^k}.
std::vector<int> phi_y(const RootDatum& rd, const std::vector<GfElem>& y);

/// Centre of the Levi inside the cocharacter space: one linear equation per
/// Levi root.  The equations are integer vectors, independent of the field.
SubspaceDescriptor center_of_levi(const RootDatum& rd, const LeviDescriptor& levi);

/// Dimension of the subspace over the given field:
/// ambient rank minus the rank of the equations.
int subspace_dim(const SubspaceDescriptor& s, Characteristic p);

/// Roots that vanish on every point of the subspace over the given field:
/// those whose differential lies in the row space of the equations.
std::vector<int> generic_phi(const RootDatum& rd, Characteristic p,
                             const SubspaceDescriptor& s);

/// A Levi is stabiliser-type when the roots generically vanishing on its
/// centre are exactly its own roots.
bool is_stabiliser_type(const RootDatum& rd, Characteristic p, const LeviDescriptor& levi);

}  // namespace declass
