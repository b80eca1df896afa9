#pragma once

#include <cstdint>
#include <string>

namespace domdimlab {

/// Result of a cutoff-limited homological search: either the exact value,
/// or the statement "value >= bound" where bound is the cutoff that was used.
class BoundedValue {
  public:
    static BoundedValue finite(std::uint64_t v) { return BoundedValue(false, v); }
    static BoundedValue at_least(std::uint64_t b) { return BoundedValue(true, b); }

    bool is_finite() const { return !lower_; }
    bool is_at_least() const { return lower_; }
    /// The exact value (finite) or the lower bound (at_least).
    std::uint64_t value() const { return v_; }

    std::string str() const
    {
        return (lower_ ? "at_least(" : "finite(") + std::to_string(v_) + ")";
    }

    bool operator==(const BoundedValue&) const = default;

  private:
    BoundedValue(bool lower, std::uint64_t v) : lower_(lower), v_(v) {}
    bool lower_;
    std::uint64_t v_;
};

/// Three-valued answer of a bounded exact search.
enum class Tristate { no, yes, undetermined };

inline std::string to_string(Tristate t)
{
    switch (t) {
    case Tristate::yes:
        return "true";
    case Tristate::no:
        return "false";
    default:
        return "undetermined";
    }
}

}  // namespace domdimlab
