#pragma once
#include <stdexcept>
#include <string>

namespace discrim {

// search or iteration budget exhausted without an answer
struct cap_exhausted : std::runtime_error {
    explicit cap_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// checkpoint file unusable: digest mismatch, wrong target, truncated record
struct checkpoint_error : std::runtime_error {
    explicit checkpoint_error(const std::string& what) : std::runtime_error(what) {}
};

// filesystem write or open failure on an output artifact
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace discrim
