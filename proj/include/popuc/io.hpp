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

#ifndef POPUC_IO_HPP
#define POPUC_IO_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chain.hpp"
#include "conjecture.hpp"
#include "orthogonality.hpp"
#include "ratpoly.hpp"

namespace popuc::io {

/// Fixed 17-significant-digit rendering used in every float column.
inline std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string join(const std::vector<BigRational>& values, std::string_view sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += to_string(values[i]);
    }
    return out;
}

/// Ascending coefficient list, e.g. "1, -1, 0, 1" for 1 - z + z^3. Zero is "0".
inline std::string format_poly(const RatPoly& p)
{
    if (p.is_zero())
        return "0";
    return join(p.coefficients());
}

/// Accepts the text form ("1, -1/2, 0") or a JSON array of fraction strings.
inline RatPoly parse_poly(std::string_view text)
{
    std::vector<BigRational> coeffs;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::InvalidArgument, std::string("bad polynomial JSON: ") + e.what());
        }
        if (!j.is_array())
            throw Error(ErrorKind::InvalidArgument, "polynomial JSON must be an array");
        for (const auto& v : j) {
            if (v.is_string())
                coeffs.push_back(parse_rational(v.get<std::string>()));
            else if (v.is_number_integer())
                coeffs.emplace_back(v.get<long>());
            else
                throw Error(ErrorKind::InvalidArgument, "polynomial JSON entries must be fraction strings");
        }
        return RatPoly(std::move(coeffs));
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coeffs.push_back(parse_rational(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return RatPoly(std::move(coeffs));
}

inline nlohmann::json to_json(const std::vector<BigRational>& values)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values)
        arr.push_back(to_string(v));
    return arr;
}

inline nlohmann::json to_json(const RatPoly& p)
{
    return to_json(p.coefficients());
}

/// { "seed", "degree", "verblunsky", "h", "polys" } with fractions as strings.
inline nlohmann::json chain_to_json(const SturmChain& c)
{
    nlohmann::json j;
    j["seed"] = to_json(c.seed());
    j["degree"] = c.degree();
    j["verblunsky"] = to_json(c.verblunsky);
    j["h"] = to_json(c.norms);
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& p : c.polys)
        polys.push_back(to_json(p));
    j["polys"] = std::move(polys);
    return j;
}

inline std::string verblunsky_csv(const SturmChain& c)
{
    std::string out = "index,a\n";
    for (std::size_t n = 0; n < c.verblunsky.size(); ++n)
        out += std::to_string(n) + "," + to_string(c.verblunsky[n]) + "\n";
    return out;
}

inline std::string spectrum_csv(const Spectrum& s)
{
    std::string out = "k,M,angle,weight,raw_weight\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& z = s.points[i];
        out += std::to_string(z.k()) + "," + std::to_string(z.M()) + "," + z.fraction() + "," + format_double(s.weights[i]) +
               "," + format_double(s.raw_weight(i)) + "\n";
    }
    return out;
}

inline std::string format_report(const GramReport& r)
{
    std::ostringstream os;
    os << "size=" << r.size << " max_offdiag=" << format_double(r.max_offdiag)
       << " max_diag_deviation=" << format_double(r.max_diag_deviation) << " tolerance=" << format_double(r.tolerance)
       << " " << (r.pass ? "PASS" : "FAIL");
    return os.str();
}

inline nlohmann::json range_to_json(const IndexRange& r)
{
    if (r.empty)
        return nlohmann::json::array();
    return nlohmann::json::array({r.first, r.last});
}

inline nlohmann::json pair_report_to_json(const PairReport& r)
{
    nlohmann::json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["N"] = r.N;
    j["head_range"] = range_to_json(r.head_range);
    j["tail_range"] = range_to_json(r.tail_range);
    nlohmann::json mism = nlohmann::json::array();
    for (const auto& m : r.mismatches)
        mism.push_back({{"index", m.index}, {"predicted", to_string(m.predicted)}, {"actual", to_string(m.actual)}});
    j["mismatches"] = std::move(mism);
    nlohmann::json conf = nlohmann::json::array();
    for (const auto& c : r.conflicts)
        conf.push_back({{"index", c.index}, {"head", to_string(c.head)}, {"tail", to_string(c.tail)}});
    j["conflicts"] = std::move(conf);
    j["pass"] = r.pass;
    return j;
}

inline nlohmann::json pair_reports_to_json(const std::vector<PairReport>& reports)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports)
        arr.push_back(pair_report_to_json(r));
    return arr;
}

} // namespace popuc::io

#endif // POPUC_IO_HPP
