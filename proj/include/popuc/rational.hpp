/*
   Copyright 2026 The popuc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POPUC_RATIONAL_HPP
#define POPUC_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace popuc {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from parts go through
/// make_rational so the same holds for them.
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigRational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(const BigInteger& num, const BigInteger& den)
{
    if (den == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q" in lowest terms, integers without "/1".
inline std::string to_string(const BigRational& r)
{
    return r.get_str(10);
}

inline BigRational parse_rational(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r')
            s.push_back(c);
    if (s.empty())
        throw Error(ErrorKind::InvalidArgument, "empty rational literal");
    if (s.front() == '+')
        s.erase(s.begin());
    const auto slash = s.find('/');
    if (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    try {
        BigInteger num(s.substr(0, slash), 10);
        BigInteger den = slash == std::string::npos ? BigInteger(1) : BigInteger(s.substr(slash + 1), 10);
        if (slash != std::string::npos && s[slash + 1] == '-')
            throw std::invalid_argument("signed denominator");
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
}

inline BigRational abs(const BigRational& r)
{
    BigRational out = r;
    if (out < 0)
        out = -out;
    return out;
}

inline bool is_unimodular(const BigRational& r)
{
    return r == 1 || r == -1;
}

} // namespace popuc

#endif // POPUC_RATIONAL_HPP
