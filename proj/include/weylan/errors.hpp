#ifndef WEYLAN_ERRORS_HPP
#define WEYLAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylan {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Variable-count mismatch between operands.
struct dimension_error : error {
    using error::error;
};

struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " at line " + std::to_string(line_) + ", column " +
                std::to_string(column_)),
          line(line_), column(column_) {}
};

/// Structural precondition failure on an input object (e.g. a map whose
/// linear part is not the identity where one is required).
struct shape_error : error {
    using error::error;
};

struct not_jacobian_error : error {
    using error::error;
};

/// Raised by the Poincare solver on a non-closed coefficient tuple;
/// (i, j) is the first offending 1-based pair in lexicographic scan order.
struct not_closed_error : error {
    int i;
    int j;
    not_closed_error(int i_, int j_)
        : error("not closed: partial(d_" + std::to_string(i_) + ", " +
                std::to_string(j_) + ") != partial(d_" + std::to_string(j_) +
                ", " + std::to_string(i_) + ")"),
          i(i_), j(j_) {}
};

struct not_poisson_error : error {
    using error::error;
};

/// A generator image breaks the order filtration required by gr.
struct filtration_error : error {
    using error::error;
};

} // namespace weylan

#endif
