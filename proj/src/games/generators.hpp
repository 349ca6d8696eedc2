#pragma once

#include <cstdint>

#include "../core/types.hpp"
#include "../learners/assumptions.hpp"

namespace menuprobe::games {

// Stackelberg game: leader mixes over m pure actions (simplex chart,
// effective dimension m-1), follower matrices i.i.d. uniform[-1,1]. The
// reduction keeps v_j = F[., j] and c_j = 0; an inert leader matrix rides in
// the metadata.
GameInstance gen_stackelberg(int m, int n, int big_k, uint64_t seed);

struct SecurityGame {
    GameInstance full; // coverage space [0,1]^n with sum <= r, identity chart
    GameInstance slice; // uniform-coverage 1-D slice x(s) = s * (r/n) * 1
    learn::AssumptionReport slice_report; // checks run on the slice
};

// Security game with n targets and r resources; attacker rewards dominate
// penalties per target. v_j = (P_j - R_j) e_j, c_j = R_j. The returned slice
// is the 1-D family the single-strategy learner sweeps; assumption failures
// on it are reported, not raised, so callers can substitute another slice.
// slice_direction (optional, length n, nonnegative) replaces the default
// uniform coverage sweep x(s) = s * (r/n) * 1; it is scaled so that s = 1
// exhausts the budget.
SecurityGame gen_security(int n, int r, int big_k, uint64_t seed, Vec slice_direction = {});

// Contract design: outcome distributions Dirichlet(1,...,1), costs
// uniform[0,1]; v_j = p_j, c_j = -cost_j; contract box [0, pay_cap]^m.
GameInstance gen_contract(int m, int n, int big_k, uint64_t seed, double pay_cap = 1.0);

// Information acquisition in linearized form: the strategy is the score
// vector indexed by (observation, state), so the ambient dimension is
// nw * no; v_j flattens Pr(w, o | j) and c_j = -cost_j.
GameInstance gen_info_acquisition(int nw, int no, int n, int big_k, uint64_t seed);

// Generic 1-D instances with guaranteed non-dominant actions (each type is
// resampled until its envelope has at least two segments). The workhorse for
// the 1-D learners and the bench harness.
GameInstance gen_generic_d1(int n, int big_k, uint64_t seed);

} // namespace menuprobe::games
