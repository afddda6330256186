#include "nbhd/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "nbhd/errors.hpp"

namespace nbhd {

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31)) throw ParameterError("field: characteristic must be a prime below 2^31");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw ParameterError("field: " + std::to_string(p) + " is not prime");
    return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "q" || s == "qq" || s == "rationals") return rationals();
    std::string_view digits;
    if (s.rfind("gf", 0) == 0) digits = std::string_view(s).substr(2);
    else if (s.rfind("f", 0) == 0) digits = std::string_view(s).substr(1);
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParameterError("field: unknown field '" + name + "' (use q, f2, f3, ...)");
    return prime_field(p);
}

std::string FieldSpec::name() const { return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

}  // namespace nbhd
