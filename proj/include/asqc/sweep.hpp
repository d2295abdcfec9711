#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "asqc/closed_form.hpp"
#include "asqc/thermal.hpp"

namespace asqc {

/// Swept quantity: the temperature or one Hamiltonian coupling.
enum class Axis { T, B1, B2, J, Jz, K, K1, K2, Dz, Gamma, Lambda };

std::string axis_label(Axis axis);
std::optional<Axis> axis_from_label(const std::string& label);

enum class Measure { LQU, LQFI };

std::string measure_label(Measure measure);

struct SweepSpec {
  HamiltonianParams base;
  /// Temperature used when the axis is a coupling; ignored for Axis::T.
  double base_temperature = 1.0;
  Axis axis = Axis::T;
  double lo = 0.0;
  double hi = 1.0;
  /// Number of grid nodes, endpoints included.
  int samples = 400;
};

struct SweepRecord {
  double x = 0.0;
  CorrelationBranches values;
};

/// A point where the active branch of one measure changes (branch_from !=
/// branch_to, refined by bisection on the branch gap), or a tangency where
/// the gap touches zero without changing sign (branch_from == branch_to,
/// located at a grid node, zero-width bracket).
struct TransitionEvent {
  Measure measure = Measure::LQU;
  double x_star = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  Branch branch_from = Branch::tie;
  Branch branch_to = Branch::tie;
  /// False only if bisection hit its iteration cap before reaching the
  /// target bracket width 1e-12 * max(1, |x_star|).
  bool refined = true;
};

struct SinkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Grid nodes where the branch gap magnitude falls below this count as
/// exact ties for sign bookkeeping.
inline constexpr double kSignZeroTol = 1e-13;

/// Target relative bracket width for bisection refinement.
inline constexpr double kBracketRelTol = 1e-12;

/// Evaluates the thermal state and both measure branch pairs at one point of
/// the sweep axis.
CorrelationBranches evaluate_at(const SweepSpec& spec, double x);

/// Uniform grid evaluation over [lo, hi] (endpoints included).  Throws
/// std::invalid_argument for non-finite bounds, lo >= hi, samples < 2, or a
/// temperature axis reaching T <= 0.
std::vector<SweepRecord> sweep(const SweepSpec& spec);

/// Branch-switch detection on an existing grid.  Sign changes of the gaps
/// U0-U1 and F0-F1 between adjacent non-tied nodes are refined by bisection;
/// interior tie runs without a sign flip are reported as tangencies.  Events
/// are sorted by x_star (LQU before LQFI at equal positions).
std::vector<TransitionEvent> detect_transitions(
    const SweepSpec& spec, const std::vector<SweepRecord>& records);

/// Convenience overload evaluating its own grid.
std::vector<TransitionEvent> detect_transitions(const SweepSpec& spec);

/// CSV with header x,U0,U1,U,F0,F1,F,active_U,active_F; one row per record
/// (12 significant digits, locale-independent), then one
/// "#transition,<measure>,<x_star>,<bracket_lo>,<bracket_hi>,<from>,<to>"
/// line per event.  Throws SinkError if the stream fails.
void emit_csv(const std::vector<SweepRecord>& records,
              const std::vector<TransitionEvent>& events, std::ostream& os);

}  // namespace asqc
