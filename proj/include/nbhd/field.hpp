#pragma once

#include <cstdint>
#include <string>

namespace nbhd {

/// Coefficient field for homology: the rationals, or GF(p).
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws ParameterError unless p is a prime below 2^31.
    static FieldSpec prime_field(std::int64_t p);
    /// "q" / "qq" / "rationals", or "f<p>" / "gf<p>" (e.g. "f2").
    static FieldSpec parse(const std::string& name);

    bool is_rationals() const { return p_ == 0; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }
    /// "QQ" or "GF(p)".
    std::string name() const;

    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

}  // namespace nbhd
