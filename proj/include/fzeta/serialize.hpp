#pragma once

// JSON documents for length sequences and geometric strings. Exact rationals
// travel as "num/den" strings.

#include "fzeta/core.hpp"
#include "fzeta/strings.hpp"

#include "json.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace fzeta {

using Json = nlohmann::ordered_json;

namespace detail {

// Integers that fit in 64 bits are plain JSON numbers; larger ones are strings.
inline Json big_to_json(const BigInt& v)
{
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

inline BigInt big_from_json(const Json& j)
{
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InvalidArgument("expected an integer");
}

inline Rational rational_from_json(const Json& j)
{
    if (!j.is_string()) throw InvalidArgument("rationals must be \"num/den\" strings");
    return parse_rational(j.get<std::string>());
}

inline CantorLayout layout_from_name(const std::string& name)
{
    if (name == "omega1") return CantorLayout::omega1;
    if (name == "omega2") return CantorLayout::omega2;
    if (name == "omega3") return CantorLayout::omega3;
    if (name == "none") return CantorLayout::none;
    throw InvalidArgument("unknown layout \"" + name + "\" (omega1, omega2, omega3)");
}

} // namespace detail

inline Json to_json(const LengthSequence& ls)
{
    Json lengths = Json::array();
    for (const auto& e : ls.entries()) lengths.push_back({{"l", to_string(e.length)}, {"m", detail::big_to_json(e.multiplicity)}});
    Json out{{"lengths", std::move(lengths)}, {"total", to_string(ls.total_length())}};
    if (const auto& rule = ls.rule()) out["rule"] = {{"r", to_string(rule->ratio())}, {"m", rule->multiplier()}};
    return out;
}

inline LengthSequence length_sequence_from_json(const Json& j)
{
    if (j.contains("rule")) {
        const auto& rule = j.at("rule");
        return LengthSequence(LatticeStringSpec(detail::rational_from_json(rule.at("r")), rule.at("m").get<unsigned>()),
                              static_cast<unsigned>(j.at("lengths").size()));
    }
    std::vector<LengthEntry> entries;
    for (const auto& e : j.at("lengths")) entries.push_back({detail::rational_from_json(e.at("l")), detail::big_from_json(e.at("m"))});
    LengthSequence ls(std::move(entries));
    if (j.contains("total") && detail::rational_from_json(j.at("total")) != ls.total_length())
        throw InvalidArgument("total does not equal the sum of m_n l_n");
    return ls;
}

inline Json to_json(const GeometricString& gs)
{
    Json intervals = Json::array();
    for (const auto& iv : gs.intervals()) intervals.push_back(Json::array({to_string(iv.a), to_string(iv.b)}));
    return {{"intervals", std::move(intervals)}, {"depth", gs.depth()}, {"layout", layout_name(gs.layout())}};
}

inline GeometricString geometric_string_from_json(const Json& j)
{
    std::vector<OpenInterval> ivs;
    for (const auto& pair : j.at("intervals")) {
        if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("intervals must be [a, b] pairs");
        ivs.push_back({detail::rational_from_json(pair[0]), detail::rational_from_json(pair[1])});
    }
    const unsigned depth = j.value("depth", 0u);
    const auto layout = detail::layout_from_name(j.value("layout", std::string("none")));
    return GeometricString(std::move(ivs), depth, layout);
}

} // namespace fzeta
