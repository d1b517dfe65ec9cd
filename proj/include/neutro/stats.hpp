#pragma once

#include <string>
#include <utility>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

struct OffProbability {
  std::string event;
  SubsetValue occurs, indet, anti;
};

Verdict classify_probability(const std::vector<OffProbability>& space, const ThresholdFrame& frame);

struct RefinedOffProbability {
  std::string event;
  std::vector<SubsetValue> occurs, indet, anti;
};

Verdict classify_refined_probability(const std::vector<RefinedOffProbability>& space, const ThresholdFrame& frame);

/// Channel-wise arithmetic mean.
Triple off_mean(const std::vector<Triple>& sample);

/// Signed points toward t and counts toward i and f for one unit of an event.
struct ContributionRule {
  std::string event;
  Rational points_t = 0;
  Rational count_i = 0;
  Rational count_f = 0;
};

struct ContributionEvent {
  std::string individual;
  std::string event;
  Rational quantity = 1;
};

using Sample = std::vector<std::pair<std::string, Triple>>;

struct ContributionResult {
  Sample members;
  Verdict verdict;
  Triple mean;
};

/// Smallest frame holding [0, 1] and every value of the sample.
ThresholdFrame enclosing_frame(const Sample& sample);
/// Classifies and averages a sample of crisp triples.
ContributionResult summarize_sample(Sample sample);

/// Individuals appear in roster order, then in order of first mention; each
/// summed channel goes through normalize_attribute(., tau_lo, tau_hi).
ContributionResult contribution_pipeline(const std::vector<ContributionEvent>& events,
                                         const std::vector<ContributionRule>& rules, const Rational& tau_lo,
                                         const Rational& tau_hi, const std::vector<std::string>& roster = {});

}  // namespace neutro
