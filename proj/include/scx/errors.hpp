#pragma once

#include <stdexcept>
#include <string>

namespace scx {

/// Failure categories surfaced by the library. The CLI maps these to
/// process exit codes, so every throw site picks the code deliberately.
enum class ErrorCode {
    vertex_out_of_range,
    empty_facet_list,
    capacity_exceeded,
    face_not_in_complex,
    parent_mismatch,
    complex_mismatch,
    not_pure,
    not_a_matroid,
    not_a_permutation,
    shelling_verification_failed,
    empty_carrier_not_strict,
    not_full_simplex,
    support_not_facets,
    facet_cap_exceeded,
    index_out_of_range,
    entry_not_in_link,
    invalid_document,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace scx
