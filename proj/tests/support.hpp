#pragma once

#include <string>

#include "neutro/core.hpp"

namespace testing {

inline neutro::Rational R(const std::string& s) { return neutro::parse_rational(s); }
inline neutro::SubsetValue P(const std::string& s) { return neutro::SubsetValue::point(R(s)); }
inline neutro::SubsetValue C(const std::string& lo, const std::string& hi) {
  return neutro::SubsetValue::closed(R(lo), R(hi));
}
inline neutro::SubsetValue O(const std::string& lo, const std::string& hi) {
  return neutro::SubsetValue::interval(R(lo), true, R(hi), true);
}
inline neutro::Triple T3(const std::string& t, const std::string& i, const std::string& f) { return {R(t), R(i), R(f)}; }

inline neutro::Element crisp(const std::string& id, const std::string& t, const std::string& i, const std::string& f,
                             const neutro::ThresholdFrame& frame) {
  return neutro::crisp_element(id, R(t), R(i), R(f), frame);
}

}  // namespace testing
