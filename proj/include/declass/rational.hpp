#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace declass {

// Exact scalars.  Expression templates are switched off so the types behave
// as plain values inside generic matrix code.
using BigInt = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational scalar_zero(const Rational&) { return Rational(0); }
inline Rational scalar_one(const Rational&) { return Rational(1); }

}  // namespace declass
