#pragma once

#include <stdexcept>
#include <string>

namespace hibi {

enum class errc {
    cycle_detected,
    unknown_element,
    duplicate_element,
    empty_poset,
    cap_exceeded,
    dimension_mismatch,
    not_a_covering,
    not_an_ideal,
    invalid_tree,
    parse_error,
    oracle_mismatch,
    internal_error,
};

constexpr const char* errc_name(errc c) {
    switch (c) {
        case errc::cycle_detected: return "CycleDetected";
        case errc::unknown_element: return "UnknownElement";
        case errc::duplicate_element: return "DuplicateElement";
        case errc::empty_poset: return "EmptyPoset";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::not_a_covering: return "NotACovering";
        case errc::not_an_ideal: return "NotAnIdeal";
        case errc::invalid_tree: return "InvalidTree";
        case errc::parse_error: return "ParseError";
        case errc::oracle_mismatch: return "OracleMismatch";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

class HibiError : public std::runtime_error {
public:
    HibiError(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw HibiError(code, what);
}

}  // namespace hibi
