#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace concord {

// Bad input: malformed text, wrong shapes, violated preconditions.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search ran out of its allotted work units.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Work meter for potentially long-running decision procedures.  Charged in
// small abstract units (word letters scanned, equality tests, ...).  A
// default-constructed budget is generous enough for every documented use;
// callers with tighter latency needs pass their own.
class Budget {
public:
    explicit Budget(std::int64_t limit = 200'000'000) : limit_(limit) {}

    void charge(std::int64_t units, const char* site) {
        used_ += units;
        if (used_ > limit_)
            throw budget_error(std::string("work budget exhausted in ") + site);
    }

    std::int64_t used() const { return used_; }
    std::int64_t limit() const { return limit_; }

private:
    std::int64_t limit_;
    std::int64_t used_ = 0;
};

} // namespace concord
