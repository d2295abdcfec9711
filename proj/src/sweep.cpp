#include "asqc/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <utility>

namespace asqc {

namespace {

constexpr int kBisectionCap = 200;

const std::pair<Axis, const char*> kAxisLabels[] = {
    {Axis::T, "T"},   {Axis::B1, "B1"}, {Axis::B2, "B2"},
    {Axis::J, "J"},   {Axis::Jz, "Jz"}, {Axis::K, "K"},
    {Axis::K1, "K1"}, {Axis::K2, "K2"}, {Axis::Dz, "Dz"},
    {Axis::Gamma, "Gamma"}, {Axis::Lambda, "Lambda"},
};

void apply_axis(HamiltonianParams& p, double& temperature, Axis axis,
                double x) {
  switch (axis) {
    case Axis::T:
      temperature = x;
      break;
    case Axis::B1:
      p.B1 = x;
      break;
    case Axis::B2:
      p.B2 = x;
      break;
    case Axis::J:
      p.J = x;
      break;
    case Axis::Jz:
      p.Jz = x;
      break;
    case Axis::K:
      p.K = x;
      break;
    case Axis::K1:
      p.K1 = x;
      break;
    case Axis::K2:
      p.K2 = x;
      break;
    case Axis::Dz:
      p.Dz = x;
      break;
    case Axis::Gamma:
      p.Gamma = x;
      break;
    case Axis::Lambda:
      p.Lambda = x;
      break;
  }
}

void check_spec(const SweepSpec& spec) {
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi)) {
    throw std::invalid_argument("sweep bounds must be finite");
  }
  if (!(spec.lo < spec.hi)) {
    throw std::invalid_argument("sweep requires lo < hi");
  }
  if (spec.samples < 2) {
    throw std::invalid_argument("sweep requires at least 2 samples");
  }
  if (spec.axis == Axis::T && spec.lo <= 0.0) {
    throw std::invalid_argument("temperature sweep requires lo > 0");
  }
  if (spec.axis != Axis::T && spec.base_temperature <= 0.0) {
    throw std::invalid_argument("base temperature must be positive");
  }
}

double node(const SweepSpec& spec, int i) {
  if (i == spec.samples - 1) {
    return spec.hi;  // hit the endpoint exactly
  }
  return spec.lo +
         (spec.hi - spec.lo) * static_cast<double>(i) /
             static_cast<double>(spec.samples - 1);
}

double gap(const CorrelationBranches& c, Measure measure) {
  return measure == Measure::LQU ? c.U0 - c.U1 : c.F0 - c.F1;
}

int gap_sign(double g) {
  if (std::abs(g) < kSignZeroTol) {
    return 0;
  }
  return g < 0.0 ? -1 : 1;
}

// gap < 0 means branch0 is the active minimum.
Branch branch_of_sign(int sign) {
  return sign < 0 ? Branch::zero : Branch::one;
}

TransitionEvent refine_crossing(const SweepSpec& spec, Measure measure,
                                double x_lo, double x_hi, double g_lo) {
  TransitionEvent event;
  event.measure = measure;
  event.branch_from = branch_of_sign(gap_sign(g_lo));
  event.branch_to = branch_of_sign(-gap_sign(g_lo));

  const bool lo_negative = g_lo < 0.0;
  int iterations = 0;
  while (iterations < kBisectionCap) {
    const double mid = 0.5 * (x_lo + x_hi);
    if (x_hi - x_lo <= kBracketRelTol * std::max(1.0, std::abs(mid))) {
      break;
    }
    const double g_mid = gap(evaluate_at(spec, mid), measure);
    if (g_mid == 0.0) {
      x_lo = mid;
      x_hi = mid;
      break;
    }
    if ((g_mid < 0.0) == lo_negative) {
      x_lo = mid;
    } else {
      x_hi = mid;
    }
    ++iterations;
  }

  event.bracket_lo = x_lo;
  event.bracket_hi = x_hi;
  event.x_star = 0.5 * (x_lo + x_hi);
  event.refined =
      x_hi - x_lo <= kBracketRelTol * std::max(1.0, std::abs(event.x_star));
  return event;
}

void detect_for_measure(const SweepSpec& spec,
                        const std::vector<SweepRecord>& records,
                        Measure measure,
                        std::vector<TransitionEvent>& events) {
  const int n = static_cast<int>(records.size());
  std::vector<int> nonzero;  // indices of nodes with a resolved sign
  nonzero.reserve(records.size());
  for (int i = 0; i < n; ++i) {
    if (gap_sign(gap(records[i].values, measure)) != 0) {
      nonzero.push_back(i);
    }
  }
  // A grid with no resolved sign (e.g. permanently tied branches) has no
  // transitions by definition.
  for (std::size_t k = 0; k + 1 < nonzero.size(); ++k) {
    const int i = nonzero[k];
    const int j = nonzero[k + 1];
    const double g_i = gap(records[i].values, measure);
    const double g_j = gap(records[j].values, measure);
    const int s_i = gap_sign(g_i);
    const int s_j = gap_sign(g_j);
    if (s_i * s_j < 0) {
      events.push_back(
          refine_crossing(spec, measure, records[i].x, records[j].x, g_i));
    } else if (j > i + 1) {
      // Interior tie run with equal flanking signs: tangency.  Anchor the
      // event at the central tied node so re-evaluation reproduces the tie.
      const int center = (i + 1 + j - 1) / 2;
      TransitionEvent event;
      event.measure = measure;
      event.x_star = records[center].x;
      event.bracket_lo = event.x_star;
      event.bracket_hi = event.x_star;
      event.branch_from = branch_of_sign(s_i);
      event.branch_to = branch_of_sign(s_i);
      events.push_back(event);
    }
  }
}

std::string format_double(double value) {
  char buffer[40];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 12);
  return std::string(buffer, result.ptr);
}

}  // namespace

std::string axis_label(Axis axis) {
  for (const auto& [value, label] : kAxisLabels) {
    if (value == axis) {
      return label;
    }
  }
  return "invalid";
}

std::optional<Axis> axis_from_label(const std::string& label) {
  for (const auto& [value, name] : kAxisLabels) {
    if (label == name) {
      return value;
    }
  }
  return std::nullopt;
}

std::string measure_label(Measure measure) {
  return measure == Measure::LQU ? "LQU" : "LQFI";
}

CorrelationBranches evaluate_at(const SweepSpec& spec, double x) {
  HamiltonianParams params = spec.base;
  double temperature = spec.base_temperature;
  apply_axis(params, temperature, spec.axis, x);
  const GibbsResult gibbs = gibbs_state(params, Temperature(temperature));
  return correlations(gibbs.state);
}

std::vector<SweepRecord> sweep(const SweepSpec& spec) {
  check_spec(spec);
  std::vector<SweepRecord> records;
  records.reserve(spec.samples);
  for (int i = 0; i < spec.samples; ++i) {
    const double x = node(spec, i);
    records.push_back({x, evaluate_at(spec, x)});
  }
  return records;
}

std::vector<TransitionEvent> detect_transitions(
    const SweepSpec& spec, const std::vector<SweepRecord>& records) {
  std::vector<TransitionEvent> events;
  detect_for_measure(spec, records, Measure::LQU, events);
  detect_for_measure(spec, records, Measure::LQFI, events);
  std::stable_sort(events.begin(), events.end(),
                   [](const TransitionEvent& a, const TransitionEvent& b) {
                     return a.x_star < b.x_star;
                   });
  return events;
}

std::vector<TransitionEvent> detect_transitions(const SweepSpec& spec) {
  return detect_transitions(spec, sweep(spec));
}

void emit_csv(const std::vector<SweepRecord>& records,
              const std::vector<TransitionEvent>& events, std::ostream& os) {
  os << "x,U0,U1,U,F0,F1,F,active_U,active_F\n";
  for (const SweepRecord& r : records) {
    const CorrelationBranches& c = r.values;
    os << format_double(r.x) << ',' << format_double(c.U0) << ','
       << format_double(c.U1) << ',' << format_double(c.U) << ','
       << format_double(c.F0) << ',' << format_double(c.F1) << ','
       << format_double(c.F) << ',' << branch_label(c.active_U) << ','
       << branch_label(c.active_F) << '\n';
  }
  for (const TransitionEvent& e : events) {
    os << "#transition," << measure_label(e.measure) << ','
       << format_double(e.x_star) << ',' << format_double(e.bracket_lo) << ','
       << format_double(e.bracket_hi) << ',' << branch_label(e.branch_from)
       << ',' << branch_label(e.branch_to) << '\n';
  }
  if (!os) {
    throw SinkError("emit_csv: output stream failed");
  }
}

}  // namespace asqc
