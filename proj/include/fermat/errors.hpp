#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fermat {

/// Enumeration or construction would exceed a configured work budget.
class WorkCapExceeded : public std::runtime_error {
public:
    WorkCapExceeded(const std::string& what_for, std::uint64_t required, std::uint64_t cap)
        : std::runtime_error(what_for + ": requires " + std::to_string(required) +
                             " units of work, cap is " + std::to_string(cap)),
          required_(required), cap_(cap) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

/// An exact computation produced something that can only come from an arithmetic bug.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Too many homotopy paths failed to classify; retry with another seed.
class InconclusiveVerification : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fermat
