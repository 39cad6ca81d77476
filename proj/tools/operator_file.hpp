#pragma once

#include <entprod/space.hpp>

#include <iosfwd>
#include <string>

namespace entprod::cli {

/// Line-oriented operator file:
///
///   # comment
///   dims 2 2
///   [1,0] [0,0] [0,0] [0,0]
///   ...
///
/// One `dims` line, then total_dim rows of total_dim `[re,im]` entries.
/// Blank lines and `#` comments are ignored.

class OperatorFileError : public std::runtime_error {
public:
    OperatorFileError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

OperatorOnSpace read_operator_file(std::istream& in);
OperatorOnSpace read_operator_file(const std::string& path);

void write_operator_file(std::ostream& out, const OperatorOnSpace& op);

} // namespace entprod::cli
