#include "neutro/stats.hpp"

#include <algorithm>
#include <map>

namespace neutro {

namespace {

void check_value(const SubsetValue& v, const std::string& where, Channel c, const ThresholdFrame& frame) {
  if (v.empty()) throw ValidationError(where + ": no chance supplied");
  if (!v.within(frame.lo(c), frame.hi(c))) throw ValidationError(where + " = " + v.str() + " lies outside the frame");
}

}  // namespace

Verdict classify_probability(const std::vector<OffProbability>& space, const ThresholdFrame& frame) {
  if (space.empty()) throw ValidationError("cannot classify an empty probability space");
  EvidenceScan scan;
  for (const auto& p : space) {
    const std::array<std::pair<const char*, const SubsetValue*>, 3> parts{
        {{"occurs", &p.occurs}, {"indet", &p.indet}, {"not", &p.anti}}};
    for (Channel c : kChannels) {
      const auto& [name, v] = parts[static_cast<int>(c)];
      const std::string where = p.event + "." + name;
      check_value(*v, where, c, frame);
      scan.scan(where, *v);
    }
  }
  return scan.verdict();
}

Verdict classify_refined_probability(const std::vector<RefinedOffProbability>& space, const ThresholdFrame& frame) {
  if (space.empty()) throw ValidationError("cannot classify an empty probability space");
  EvidenceScan scan;
  for (const auto& p : space) {
    if (p.occurs.size() + p.indet.size() + p.anti.size() < 4)
      throw ValidationError(p.event + ": refined probability needs at least four subchances");
    const std::array<std::pair<const char*, const std::vector<SubsetValue>*>, 3> parts{
        {{"occurs", &p.occurs}, {"indet", &p.indet}, {"not", &p.anti}}};
    for (Channel c : kChannels) {
      const auto& [name, vs] = parts[static_cast<int>(c)];
      for (std::size_t k = 0; k < vs->size(); ++k) {
        const std::string where = p.event + "." + name + std::to_string(k + 1);
        check_value((*vs)[k], where, c, frame);
        scan.scan(where, (*vs)[k]);
      }
    }
  }
  return scan.verdict();
}

Triple off_mean(const std::vector<Triple>& sample) {
  if (sample.empty()) throw ValidationError("mean of an empty sample");
  Triple sum{0, 0, 0};
  for (const auto& x : sample) {
    sum.t += x.t;
    sum.i += x.i;
    sum.f += x.f;
  }
  const Rational n(static_cast<long long>(sample.size()));
  return {sum.t / n, sum.i / n, sum.f / n};
}

ThresholdFrame enclosing_frame(const Sample& sample) {
  Rational lo = 0, hi = 1;
  for (const auto& [id, x] : sample)
    for (const Rational* v : {&x.t, &x.i, &x.f}) {
      lo = std::min(lo, *v);
      hi = std::max(hi, *v);
    }
  return make_frame(lo, hi);
}

ContributionResult summarize_sample(Sample sample) {
  if (sample.empty()) throw ValidationError("empty sample");
  const ThresholdFrame frame = enclosing_frame(sample);
  OffCollection c(frame);
  std::vector<Triple> xs;
  for (const auto& [id, x] : sample) {
    c.add(crisp_element(id, x.t, x.i, x.f, frame));
    xs.push_back(x);
  }
  ContributionResult r;
  r.verdict = classify_collection(c);
  r.mean = off_mean(xs);
  r.members = std::move(sample);
  return r;
}

ContributionResult contribution_pipeline(const std::vector<ContributionEvent>& events,
                                         const std::vector<ContributionRule>& rules, const Rational& tau_lo,
                                         const Rational& tau_hi, const std::vector<std::string>& roster) {
  std::map<std::string, const ContributionRule*> by_event;
  for (const auto& r : rules)
    if (!by_event.emplace(r.event, &r).second) throw ValidationError("duplicate rule for event '" + r.event + "'");

  std::vector<std::string> order;
  std::map<std::string, Triple> raw;
  for (const auto& id : roster)
    if (raw.try_emplace(id, Triple{0, 0, 0}).second) order.push_back(id);
  for (const auto& e : events) {
    auto rule = by_event.find(e.event);
    if (rule == by_event.end()) throw ValidationError("no rule for event '" + e.event + "' (" + e.individual + ")");
    auto [it, fresh] = raw.try_emplace(e.individual, Triple{0, 0, 0});
    if (fresh) order.push_back(e.individual);
    it->second.t += e.quantity * rule->second->points_t;
    it->second.i += e.quantity * rule->second->count_i;
    it->second.f += e.quantity * rule->second->count_f;
  }
  Sample sample;
  for (const auto& id : order) {
    const Triple& x = raw[id];
    sample.emplace_back(id, Triple{normalize_attribute(x.t, tau_lo, tau_hi), normalize_attribute(x.i, tau_lo, tau_hi),
                                   normalize_attribute(x.f, tau_lo, tau_hi)});
  }
  return summarize_sample(std::move(sample));
}

}  // namespace neutro
