#pragma once

#include <vector>

#include "logdiv/module.hpp"

namespace logdiv {

/// Returns M with its reduced Groebner basis cached. Homogeneous input is
/// processed degree by degree and also yields minimal generators.
Submodule groebner(const Submodule& m, const Budget& budget = {});

/// Fully reduced remainder of v modulo M (computes the GB if missing).
ModuleElement normal_form(const ModuleElement& v, const Submodule& m);
bool contains(const Submodule& m, const ModuleElement& v);
bool contains(const Submodule& ideal, const Polynomial& p);
/// Every generator of `inner` lies in `outer`.
bool is_subset(const Submodule& inner, const Submodule& outer);
bool same_submodule(const Submodule& a, const Submodule& b);

/// Generators of {(a_1..a_k) : sum a_j v_j = 0} in R^k, graded with
/// shifts deg(v_j) when the v_j are homogeneous (then the generators are
/// minimal). Every returned generator is verified to be a syzygy.
Submodule syzygies(const std::vector<ModuleElement>& vectors, const Budget& budget = {});
/// Convenience for ideals: syzygies between polynomials.
Submodule syzygies(const std::vector<Polynomial>& polys, const Budget& budget = {});

/// M : g = {v : g v in M}.
Submodule colon(const Submodule& m, const Polynomial& g, const Budget& budget = {});
/// M : g^infinity.
Submodule saturate(const Submodule& m, const Polynomial& g, const Budget& budget = {});
/// M : J^infinity for an ideal J.
Submodule saturate(const Submodule& m, const Submodule& j, const Budget& budget = {});
/// Same result computed literally as the fixpoint of M_{k+1} = M_k : J.
Submodule saturate_by_colon_iteration(const Submodule& m, const Submodule& j,
                                      const Budget& budget = {});
Submodule intersect(const Submodule& a, const Submodule& b, const Budget& budget = {});
/// Sum of two submodules of the same free module.
Submodule sum(const Submodule& a, const Submodule& b);
/// I + J for ideals whose generators live in the same ring.
Submodule ideal_sum(const Submodule& a, const std::vector<Polynomial>& more);

/// Component of the lead term of a nonzero v in its module order.
int lead_component(const ModuleElement& v);

/// Krull dimension of R/I; -1 for the unit ideal.
int krull_dimension(const Submodule& ideal, const Budget& budget = {});

/// Expresses the generators of `m` in another ring with the same variables
/// (typically a different monomial order).
Submodule change_ring(const Submodule& m, const RingPtr& ring);

/// Ring with the same variables and weights but an elimination variable
/// "t" prepended (weight 0, elimination block of size one).
RingPtr ring_with_elimination_variable(const RingPtr& ring);

}  // namespace logdiv
