#include "dumbbell/profile.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

#include "dumbbell/errors.hpp"

namespace dumbbell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiSixth = kPi / 6.0;

std::string segment_name(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::Cap: return "cap";
    case SegmentKind::Connector: return "connector";
    case SegmentKind::Neck: return "neck";
    case SegmentKind::Bump: return "bump";
  }
  return "?";
}

ProfileSegment make_cap_rising() {
  return {SegmentKind::Cap, kCapLength,
          [](double s) { return Jet2{std::sin(s), std::cos(s), -std::sin(s)}; }};
}

// sin(3*pi/4 - s); written this way so the pole value at s = 3*pi/4 is an
// exact zero and the chain is an exact mirror of the rising cap.
ProfileSegment make_cap_falling() {
  return {SegmentKind::Cap, kCapLength, [](double s) {
            const double u = kCapLength - s;
            return Jet2{std::sin(u), -std::cos(u), -std::sin(u)};
          }};
}

ProfileSegment make_bump() {
  return {SegmentKind::Bump, kBumpLength, [](double s) {
            const double u = s + kPi / 4.0;
            return Jet2{std::sin(u), std::cos(u), -std::sin(u)};
          }};
}

// eps*cosh centered at local s = L: F(s) = e^{s-2L}/2 + e^{-s}/2. The two
// exponentials swap under s -> 2L - s, so the neck is exactly symmetric
// and F(L) evaluates to exp(-L) on the nose.
ProfileSegment make_neck(double two_l) {
  return {SegmentKind::Neck, two_l, [two_l](double s) {
            const double grow = 0.5 * std::exp(s - two_l);
            const double decay = 0.5 * std::exp(-s);
            return Jet2{grow + decay, grow - decay, grow + decay};
          }};
}

// into_neck: traversed from the sphere side down to the neck end, which
// mirrors the connector coordinate and flips the odd derivative.
ProfileSegment make_connector(double eps, const SmoothCutoff& cutoff, bool into_neck) {
  if (into_neck) {
    return {SegmentKind::Connector, kConnectorLength, [eps, cutoff](double s) {
              const Jet2 j = eval_connector(eps, kConnectorLength - s, cutoff);
              return Jet2{j.f, -j.d1, j.d2};
            }};
  }
  return {SegmentKind::Connector, kConnectorLength,
          [eps, cutoff](double s) { return eval_connector(eps, s, cutoff); }};
}

void validate_chain(const ChainProfile& chain) {
  const auto segments = chain.segments();
  const auto breakpoints = chain.breakpoints();

  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    const Jet2 left = segments[i].eval(segments[i].length);
    const Jet2 right = segments[i + 1].eval(0.0);
    const double f_tol = 1e-12 * std::max(1.0, std::abs(left.f));
    if (std::abs(left.f - right.f) > f_tol || std::abs(left.d1 - right.d1) > 1e-8 ||
        std::abs(left.d2 - right.d2) > 1e-8) {
      throw NumericalError("build_chain: profile is not C^2 across the " +
                           segment_name(segments[i].kind) + "/" +
                           segment_name(segments[i + 1].kind) + " junction at t=" +
                           std::to_string(breakpoints[i + 1]));
    }
  }

  const Jet2 start = segments.front().eval(0.0);
  const Jet2 end = segments.back().eval(segments.back().length);
  if (std::abs(start.f) > 1e-14 || std::abs(start.d1 - 1.0) > 1e-12 ||
      std::abs(end.f) > 1e-14 || std::abs(end.d1 + 1.0) > 1e-12) {
    throw NumericalError("build_chain: pole closure failed at a chain end");
  }

  // Connector bound; a violation means the cutoff window is unusable.
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].kind != SegmentKind::Connector) continue;
    for (int j = 0; j <= 64; ++j) {
      const double s = segments[i].length * j / 64.0;
      const double value = segments[i].eval(s).f;
      if (!(value >= 0.5 - 1e-12 && value < 0.8)) {
        throw NumericalError("build_chain: connector value " + std::to_string(value) +
                             " escapes [0.5, 0.8)");
      }
    }
  }
}

}  // namespace

double DumbbellSpec::log_scale() const { return -std::log(eps); }

void DumbbellSpec::validate() const {
  if (!(eps > 0.0) || eps > kEpsMax)
    throw std::domain_error("DumbbellSpec: eps must lie in (0, " + std::to_string(kEpsMax) + "]");
  if (necks < 1) throw std::domain_error("DumbbellSpec: need at least one neck");
  if (ambient_dim < 2) throw std::domain_error("DumbbellSpec: ambient dimension must be >= 2");
  if (degree < 0 || degree > ambient_dim - 2)
    throw std::domain_error("DumbbellSpec: degree must lie in [0, m-2]");
  if (!(vol_h2 >= 0.0)) throw std::domain_error("DumbbellSpec: vol_h2 must be >= 0");
}

Jet2 eval_f_eps(double eps, double s) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("eval_f_eps: eps must lie in (0, 1)");
  const double grow = 0.5 * std::exp(s);
  const double decay = 0.5 * eps * eps * std::exp(-s);
  return {grow + decay, grow - decay, grow + decay};
}

Jet2 eval_h(double s) {
  if (s < 0.0 || s > kConnectorLength) {
    std::cerr << "dumbbell: eval_h sampled at s=" << s
              << " outside [0, pi/12]; extending analytically\n";
  }
  const double v = std::sin(s + kPiSixth);
  return {v, std::cos(s + kPiSixth), -v};
}

Jet2 eval_connector(double eps, double s, const SmoothCutoff& cutoff) {
  const double slack = 1e-12;
  if (s < -slack || s > kConnectorLength + slack)
    throw std::domain_error("eval_connector: coordinate outside [0, pi/12]");
  s = std::clamp(s, 0.0, kConnectorLength);

  const Jet2 chi = cutoff.eval(s);
  const Jet2 f = eval_f_eps(eps, s);
  const Jet2 h = eval_h(s);
  const double gap = f.f - h.f;
  const double gap1 = f.d1 - h.d1;
  return {chi.f * f.f + (1.0 - chi.f) * h.f,
          chi.d1 * gap + chi.f * f.d1 + (1.0 - chi.f) * h.d1,
          chi.d2 * gap + 2.0 * chi.d1 * gap1 + chi.f * f.d2 + (1.0 - chi.f) * h.d2};
}

ChainProfile::ChainProfile(std::vector<ProfileSegment> segments, int fiber_dim)
    : segments_(std::move(segments)), fiber_dim_(fiber_dim) {
  if (segments_.empty()) throw std::invalid_argument("ChainProfile: no segments");
  if (fiber_dim_ < 2) throw std::invalid_argument("ChainProfile: fiber dimension must be >= 2");
  breakpoints_.reserve(segments_.size() + 1);
  breakpoints_.push_back(0.0);
  for (const auto& segment : segments_) {
    if (!(segment.length > 0.0))
      throw std::invalid_argument("ChainProfile: segment length must be positive");
    breakpoints_.push_back(breakpoints_.back() + segment.length);
  }
}

Jet2 ChainProfile::eval(double t) const {
  const double total = breakpoints_.back();
  const double slack = 1e-12 * std::max(1.0, total);
  if (t < -slack || t > total + slack)
    throw std::domain_error("ChainProfile::eval: coordinate outside [0, T]");
  t = std::clamp(t, 0.0, total);

  const auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), t);
  const auto index = static_cast<std::size_t>(it - breakpoints_.begin() - 1);
  const auto& segment = segments_[index];
  const double s = std::clamp(t - breakpoints_[index], 0.0, segment.length);
  return segment.eval(s);
}

std::vector<std::pair<double, double>> ChainProfile::intervals(SegmentKind kind) const {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < segments_.size(); ++i)
    if (segments_[i].kind == kind) out.emplace_back(breakpoints_[i], breakpoints_[i + 1]);
  return out;
}

ChainProfile ChainProfile::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::domain_error("ChainProfile::scaled: factor must be positive");
  const double root = std::sqrt(factor);
  std::vector<ProfileSegment> out;
  out.reserve(segments_.size());
  for (const auto& segment : segments_) {
    out.push_back({segment.kind, segment.length * root,
                   [root, eval = segment.eval](double s) {
                     const Jet2 j = eval(s / root);
                     return Jet2{root * j.f, j.d1, j.d2 / root};
                   }});
  }
  return ChainProfile(std::move(out), fiber_dim_);
}

ChainProfile build_chain(const DumbbellSpec& spec) {
  return build_chain(spec, SmoothCutoff(kCutoffLower, kCutoffUpper));
}

ChainProfile build_chain(const DumbbellSpec& spec, const SmoothCutoff& cutoff) {
  spec.validate();
  const double two_l = 2.0 * spec.log_scale();

  std::vector<ProfileSegment> segments;
  segments.reserve(static_cast<std::size_t>(4 * spec.necks + 1));
  segments.push_back(make_cap_rising());
  segments.push_back(make_connector(spec.eps, cutoff, /*into_neck=*/true));
  segments.push_back(make_neck(two_l));
  segments.push_back(make_connector(spec.eps, cutoff, /*into_neck=*/false));
  for (int i = 1; i < spec.necks; ++i) {
    segments.push_back(make_bump());
    segments.push_back(make_connector(spec.eps, cutoff, /*into_neck=*/true));
    segments.push_back(make_neck(two_l));
    segments.push_back(make_connector(spec.eps, cutoff, /*into_neck=*/false));
  }
  segments.push_back(make_cap_falling());

  ChainProfile chain(std::move(segments), spec.fiber_dim());
  validate_chain(chain);
  return chain;
}

}  // namespace dumbbell
