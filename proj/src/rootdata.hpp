#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rational.hpp"

namespace satrop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;  // row-major
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

enum class Family { A, B, C, D, E, F, G };
enum class Form { simply_connected, adjoint, gl };

char family_letter(Family f);
Family family_from_letter(char c);
std::string form_name(Form f);
Form form_from_name(const std::string& s);

struct CartanType {
  Family family;
  int rank;

  std::string to_string() const;
  bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
};

// Admissibility: E in {6,7,8}, F = 4, G = 2, B,C >= 2, D >= 4, A >= 1.
bool cartan_type_admissible(CartanType t);
IMat cartan_matrix(CartanType t);

// Root datum in a fixed integer basis per form. The pairing between the
// cocharacter and character lattices is the standard dot product in these
// bases (unimodular by construction):
//   simply_connected: X basis = fundamental weights, X^vee basis = simple coroots
//   adjoint:          X basis = simple roots, X^vee basis = fundamental coweights
//   gl:               X = X^vee = Z^m, roots/coroots e_i - e_{i+1}
struct RootDatum {
  CartanType type;  // for gl form: the derived type A_{m-1}
  Form form;
  int rank_I;        // number of simple roots
  int lattice_rank;  // rank of X and X^vee
  IMat simple_roots;    // rows: alpha_i in X coordinates
  IMat simple_coroots;  // rows: alpha_i^vee in X^vee coordinates
  IMat cartan;          // a_ij = <alpha_i^vee, alpha_j>
  IMat positive_roots;     // in X coordinates; [0..rank_I) are the simple ones
  IMat positive_coroots;   // coroot of positive_roots[k], in X^vee coordinates
  QVec rho;       // half sum of positive roots (rational in adjoint bases)
  QVec rho_vee;   // half sum of positive coroots
  IMat w0_on_char;  // matrix of the longest Weyl element acting on X

  std::string name() const;
};

RootDatum build_root_datum(CartanType type, Form form);
RootDatum build_gl_datum(int m);
RootDatum dual(const RootDatum& d);

long long dot(const IVec& a, const IVec& b);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, long long s);
IVec mat_apply(const IMat& m, const IVec& v);  // rows of m are images of basis? No: (m*v)_i = sum_j m[i][j] v_j

// <v, x> for v in X^vee, x in X.
long long pairing(const RootDatum& d, const IVec& cochar, const IVec& chr);

IVec reflect_char(const RootDatum& d, int i, const IVec& x);
IVec reflect_cochar(const RootDatum& d, int i, const IVec& v);
bool is_dominant_coweight(const RootDatum& d, const IVec& v);
bool is_dominant_char(const RootDatum& d, const IVec& x);

// <rho, sum of coweights>; integral whenever the sum lies in the coroot lattice.
Rational height(const RootDatum& d, const std::vector<IVec>& coweights);
long long height_int(const RootDatum& d, const std::vector<IVec>& coweights);

// Is x in the Z-span of the simple roots (resp. coroots)?
bool in_root_lattice(const RootDatum& d, const IVec& x);
bool in_coroot_lattice(const RootDatum& d, const IVec& v);

// Express x in the simple-root basis; nullopt when not in the rational span.
std::optional<QVec> root_coordinates(const RootDatum& d, const IVec& x);

// Fundamental coweights, when they lie in X^vee (sc: the coroot basis dual;
// gl: e_1+..+e_i). Throws for forms where they are not lattice points.
IMat fundamental_coweights(const RootDatum& d);

// -w0(x) on characters / cocharacters.
IVec dual_char(const RootDatum& d, const IVec& x);
IVec w0_char(const RootDatum& d, const IVec& x);
IVec w0_cochar(const RootDatum& d, const IVec& v);

// Diagram automorphism: a permutation of I together with the induced maps
// on X and X^vee. Validated on construction.
struct DiagramAutomorphism {
  IVec perm;       // perm[i] = sigma(i), 0-based
  IMat on_char;    // matrix acting on X coordinates
  IMat on_cochar;  // matrix acting on X^vee coordinates
  int order = 1;
  std::vector<IVec> orbits;          // sorted by min element, each sorted
  std::vector<bool> orbit_adjacent;  // orbit {i,j} with a_ij = -1

  IVec apply_char(const IVec& x) const { return mat_apply(on_char, x); }
  IVec apply_cochar(const IVec& v) const { return mat_apply(on_cochar, v); }
};

DiagramAutomorphism make_automorphism(const RootDatum& d, const IVec& perm);
DiagramAutomorphism identity_automorphism(const RootDatum& d);
// The order-2 flip i -> rank_I - 1 - i for type A and gl ambients.
DiagramAutomorphism flip_automorphism(const RootDatum& d);
// Order-3 triality for D4 (Bourbaki nodes 1 -> 3 -> 4 -> 1, center 2 fixed).
DiagramAutomorphism triality_automorphism(const RootDatum& d);

bool has_adjacent_orbit(const DiagramAutomorphism& s);
// The constant in {2,3,4}: 2 for order 2 without an adjacent orbit, 3 for
// order 3, 4 for order 2 with one.
int c_sigma(const DiagramAutomorphism& s);

// Orbit-wise sum S(lambda) on cocharacters; always sigma-invariant, and
// equal to c_sigma * lambda on sigma-invariant lambda.
IVec s_map(const RootDatum& d, const DiagramAutomorphism& s, const IVec& lambda);

struct FoldedDatum {
  RootDatum folded;                  // the root datum of G_sigma
  std::vector<IVec> orbits;          // as in the automorphism
  std::vector<bool> orbit_adjacent;
  IVec orbit_sizes;                  // r_eta
  IMat x_sigma_basis;    // rows: basis of the sigma-invariant sublattice of X, in X coords
  IMat alpha_eta;        // rows: alpha_eta in ambient X coords
  IMat alpha_eta_vee;    // rows: alpha_eta^vee = theta(alpha_i^vee) in the folded X^vee coords
};

// Fold per the orbit recipe; not offered for the gl form.
FoldedDatum fold(const RootDatum& d, const DiagramAutomorphism& s);

// Express a sigma-invariant character of the ambient datum in the folded
// X_sigma basis (the weight identification). Errors when x is not invariant.
IVec fold_char(const FoldedDatum& f, const RootDatum& ambient, const DiagramAutomorphism& s,
               const IVec& x);

// Enumerate dominant coweights of height <= maxht for semisimple forms
// (coroot-basis coordinates are nonnegative on dominants). Sorted by
// (height, lex).
std::vector<IVec> dominant_coweights_up_to(const RootDatum& d, long long maxht);

nlohmann::ordered_json datum_to_json(const RootDatum& d);
nlohmann::ordered_json folded_to_json(const FoldedDatum& f);

// Basis of the integer kernel of an integer matrix (rows x cols), as rows.
IMat integer_kernel(const IMat& m);

}  // namespace satrop
