#pragma once

#include <stdexcept>
#include <string>

namespace tribch {

// Base for every error the library raises on purpose. The kind() tag is the
// machine-readable kind the CLI prints in failure records.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

// Family parameter condition (gcd(n,k) = 1, n = 2t+1) does not hold.
struct ConditionViolated : Error {
    explicit ConditionViolated(const std::string& what) : Error("ConditionViolated", what) {}
};

// Both exponents reduce to the same residue (or to a constant map).
struct DegeneratePair : Error {
    explicit DegeneratePair(const std::string& what) : Error("DegeneratePair", what) {}
};

struct RankDefect : Error {
    explicit RankDefect(const std::string& what) : Error("RankDefect", what) {}
};

struct NonIntegralResult : Error {
    explicit NonIntegralResult(const std::string& what) : Error("NonIntegralResult", what) {}
};

// Two distinct error patterns of weight <= 2 share a syndrome.
struct CollisionDetected : Error {
    explicit CollisionDetected(const std::string& what) : Error("CollisionDetected", what) {}
};

} // namespace tribch
