#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fockcas/fock.hpp"
#include "fockcas/vertex.hpp"

namespace fockcas {

/// The Virasoro element omega = (1/2) h(-1)^2 vac.
FockVector virasoro();

/// The weight-4 generator J = h(-1)^4 vac - 2 h(-3)h(-1) vac + (3/2) h(-2)^2 vac
/// of the theta-fixed subalgebra (together with omega).
FockVector jay();

/// Named element lookup: "omega", "jay", "vac".
FockVector generator(const std::string& name);

/// Outcome of one verification. pass holds exactly when the residual is zero.
struct RelationReport {
    std::string name;
    bool pass = false;
    std::string detail;
    FockVector residual{Sector::Untwisted};

    std::size_t residual_terms() const { return residual.term_count(); }
};

/// Applies nested modes right to left: chain {(a,p),(b,q)} gives a_p (b_q vac).
FockVector mode_chain(const std::vector<std::pair<FockVector, long long>>& chain);

/// Expands the named weight-9 or weight-10 combination of omega- and J-modes
/// ("P9" / "P10") into the monomial basis; it must cancel to zero.
RelationReport assemble_relation(const std::string& name);

/// Checks [omega_i, J_j] = (3i - j) J_{i+j-1}: structurally via
/// omega_0 J = L(-1)J, omega_1 J = 4J, omega_k J = 0 (k >= 2), and as operators
/// on every basis vector of weight <= basis_weight for (i,j) in the box.
RelationReport verify_lie_oj(long long i_lo = -1, long long i_hi = 3,
                             long long j_lo = -1, long long j_hi = 3,
                             long long basis_weight = 6);

/// Checks the J-J commutator expansion: J_k J for k = 0..7 against the closed
/// combinations of omega- and J-modes, and J_k J = 0 for k = 6 and 8..10.
RelationReport verify_jj_commutator();

/// Twice the vac-coefficient of omega_3 omega.
Rational central_charge();

/// All weight-(<= max_weight) basis monomials of the untwisted algebra.
std::vector<FockVector> basis_up_to_weight(long long max_weight);

/// Fraction-free (Bareiss) determinant; exact, destroys its copy of the input.
Rational bareiss_determinant(std::vector<std::vector<Rational>> a);

/// Closed form for det(C(x_i,k) C(y_j,l))_{(i,j),(k,l) in S}, S = {i+j <= n}.
Rational determinant_closed_form(long n, const std::vector<Rational>& xs,
                                 const std::vector<Rational>& ys);

/// Builds the binomial matrix over S, evaluates both routes and compares.
/// Throws DegenerateInput when the points are not pairwise distinct.
RelationReport verify_determinant_lemma(long n, const std::vector<Rational>& xs,
                                        const std::vector<Rational>& ys);

} // namespace fockcas
