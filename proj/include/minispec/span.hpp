#pragma once

#include <string>

namespace minispec {

/// Half-inclusive source range, 1-based lines and columns.
struct SourceSpan {
    std::string file;
    int line_start = 0;
    int col_start = 0;
    int line_end = 0;
    int col_end = 0;

    bool valid() const { return line_start > 0; }
    std::string to_string() const;
};

SourceSpan merge_spans(const SourceSpan& a, const SourceSpan& b);

}  // namespace minispec
