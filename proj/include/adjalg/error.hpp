#pragma once

#include <stdexcept>
#include <string>

namespace adjalg {

// Machine-readable failure kinds. `math` failures mean a structural claim the
// pipeline relies on did not hold for the given data; `input` failures mean
// the data itself was rejected.
enum class errc {
    no_solution,
    not_unique,
    not_a_group,
    not_subgroup,
    not_normal,
    not_hopf,
    not_hopf_map,
    algebra_mismatch,
    not_equivariant,
    not_surjective,
    validation_failed,
    constraint_violation,
    not_nested,
    not_closed,
    not_invertible,
    model_mismatch,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::no_solution: return "NoSolution";
        case errc::not_unique: return "NotUnique";
        case errc::not_a_group: return "NotAGroup";
        case errc::not_subgroup: return "NotSubgroup";
        case errc::not_normal: return "NotNormal";
        case errc::not_hopf: return "NotHopf";
        case errc::not_hopf_map: return "NotHopfMap";
        case errc::algebra_mismatch: return "AlgebraMismatch";
        case errc::not_equivariant: return "NotEquivariant";
        case errc::not_surjective: return "NotSurjective";
        case errc::validation_failed: return "ValidationFailed";
        case errc::constraint_violation: return "ConstraintViolation";
        case errc::not_nested: return "NotNested";
        case errc::not_closed: return "NotClosed";
        case errc::not_invertible: return "NotInvertible";
        case errc::model_mismatch: return "ModelMismatch";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

    // true for failures of a mathematical claim (CLI exit 1), false for
    // rejected input (CLI exit 2)
    bool is_math_failure() const {
        switch (code_) {
            case errc::not_a_group:
            case errc::not_subgroup:
            case errc::not_normal:
            case errc::bad_input:
            case errc::not_surjective:
                return false;
            default:
                return true;
        }
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace adjalg
