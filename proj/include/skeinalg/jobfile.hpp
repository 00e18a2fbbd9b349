#pragma once

#include <optional>
#include <string>

#include "skeinalg/spanning.hpp"

namespace skein {

/// Spanning job: the problem plus an optional order for per-degree
/// leading-matrix verdicts.
struct SpanJob {
    SpanProblem problem;
    std::optional<MonomialOrder> leading_order;
    std::string leading_order_name;
};

/// Parse a spanning job document:
///
///   ring = s4                  # s4 | h2
///   weight = sprime            # sprime | s | xzy | custom:2,2,1,...
///   cutoff = 9
///   cap = 9                    # optional; defaults to cutoff
///   leading_order = s4-leading # optional: s4-leading | grlex | lex:i,j,...
///   generator a1 = s1
///   generator a23 = s23 + s2*s3
///   x = 1
///
/// '#' starts a comment. Throws SchemaError with the offending field path.
SpanJob parse_span_job(const std::string& text);

SpanJob load_span_job(const std::string& path);

} // namespace skein
