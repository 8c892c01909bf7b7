#ifndef BBT_ERRORS_HPP
#define BBT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bbt {

// Failure kinds surfaced by the library. Kept as one enum so callers
// (tests, CLI exit-code mapping) can switch on the kind without parsing
// messages.
enum class errc {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    syntax_error,
    missing_header,
    edge_not_in_graph,
    not_connected,
    invalid_parameter,
    too_large,
    too_small,
    size_mismatch,
    budget_exceeded,
    invalid_color,
    same_color,
    not_a_kempe_component,
    color_out_of_range,
    not_connected_input,
    algorithm_stalled,
    degree_zero,
    cap_exceeded,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::syntax_error: return "SyntaxError";
        case errc::missing_header: return "MissingHeader";
        case errc::edge_not_in_graph: return "EdgeNotInGraph";
        case errc::not_connected: return "NotConnected";
        case errc::invalid_parameter: return "InvalidParameter";
        case errc::too_large: return "TooLarge";
        case errc::too_small: return "TooSmall";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::invalid_color: return "InvalidColor";
        case errc::same_color: return "SameColor";
        case errc::not_a_kempe_component: return "NotAKempeComponent";
        case errc::color_out_of_range: return "ColorOutOfRange";
        case errc::not_connected_input: return "NotConnectedInput";
        case errc::algorithm_stalled: return "AlgorithmStalled";
        case errc::degree_zero: return "DegreeZero";
        case errc::cap_exceeded: return "CapExceeded";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace bbt

#endif // BBT_ERRORS_HPP
