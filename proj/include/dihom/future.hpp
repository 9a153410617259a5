#pragma once

#include <optional>
#include <string>

#include "dihom/monotonize.hpp"

namespace dihom {

/// Which lattice operation the time sweeps use. `future` sweeps with meets;
/// `past` works in the order-dual target, where meets are joins.
enum class Orientation { future, past };

template <class H>
struct JK {
  H j;
  H k;
};

/// True iff {1 - t} is the same sample set (to within 1e-12).
bool times_symmetric(const std::vector<double>& times);
/// Adds the reflection 1 - t of every sample; a new frame copies the frame
/// at the nearest earlier original sample.
TimedHomotopy symmetrized(const TimedHomotopy& h);
FiniteHomotopy symmetrized(const FiniteHomotopy& h);

/// j(x,t) = meet of h(x,s) over s <= 1-t and k(x,t) = meet over s >= t, by
/// prefix and suffix sweeps. Requires monotone frames (PreconditionError)
/// and symmetric time samples (InputError).
JK<TimedHomotopy> synthesize_jk(const TimedHomotopy& h, Orientation o = Orientation::future);
JK<FiniteHomotopy> synthesize_jk(const FiniteHomotopy& h, const FiniteLattice& target,
                                 Orientation o = Orientation::future);

struct FutureReport {
  bool ok = true;
  std::string reason;
  /// Failing frame index; for a time violation, the later of the two frames.
  std::optional<std::size_t> frame;
  /// Grid tier: vertex coordinates (i, j, i2, j2); finite tier: element indices in [0] and [1].
  std::optional<std::array<std::size_t, 4>> witness;
};

/// Every frame monotone and frames pointwise nondecreasing in time.
FutureReport verify_future_homotopy(const TimedHomotopy& h);
FutureReport verify_future_homotopy(const FiniteHomotopy& h, const FiniteLattice& target);

/// x + t (top - x) sampled at `frames` uniform times on the identity sampling of [0,1]^dim_out.
TimedHomotopy straight_line_contraction(std::size_t nx, std::size_t ny, std::size_t dim_out, std::size_t frames);
/// (identity, constant top) on a finite lattice.
FiniteHomotopy two_frame_contraction(const FiniteLattice& l);

/// Turns a classical contraction (identity to constant top) into a verified
/// future contraction: every frame is monotonized, then the time sweep runs
/// with joins, i.e. frame t is the join of the monotonized frames up to t.
/// Throws InputError on endpoint mismatch and ContractError if the result
/// fails verification.
TimedHomotopy contract(const TimedHomotopy& classical);
FiniteHomotopy contract(const FiniteLattice& l, const FiniteHomotopy& classical);

/// Reverses the time axis (t -> 1 - t).
TimedHomotopy time_reversed(const TimedHomotopy& h);
FiniteHomotopy time_reversed(const FiniteHomotopy& h);

/// Order-dual of values in [0,1]^k (v -> 1 - v); the grid-tier order reversal.
GridFunction value_dual(const GridFunction& f);

}  // namespace dihom
