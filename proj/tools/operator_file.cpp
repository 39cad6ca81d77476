#include "operator_file.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace entprod::cli {

OperatorFileError::OperatorFileError(int line, int column, const std::string& message)
    : std::runtime_error(fmt::format("line {}, column {}: {}", line, column, message)),
      line_(line), column_(column) {}

namespace {

struct Cursor {
    const std::string& text;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw OperatorFileError(line, static_cast<int>(pos) + 1, message);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) {
            fail(fmt::format("expected '{}'", c));
        }
        ++pos;
    }
    double number() {
        skip_ws();
        double value = 0.0;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{}) {
            fail("expected a decimal number");
        }
        pos += static_cast<std::size_t>(ptr - begin);
        return value;
    }
};

// Strips a '#' comment; returns false for blank lines.
bool significant(std::string& line) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
    }
    for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

} // namespace

OperatorOnSpace read_operator_file(std::istream& in) {
    std::vector<Eigen::Index> dims;
    ComplexMatrix matrix;
    Eigen::Index total = 0;
    Eigen::Index row = 0;
    bool have_dims = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        Cursor cur{line, lineno};
        if (!have_dims) {
            cur.skip_ws();
            if (line.compare(cur.pos, 4, "dims") != 0) {
                cur.fail("expected 'dims' header");
            }
            cur.pos += 4;
            while (!cur.done()) {
                const double d = cur.number();
                if (d < 1 || d != std::floor(d)) {
                    cur.fail("local dimensions must be positive integers");
                }
                dims.push_back(static_cast<Eigen::Index>(d));
            }
            if (dims.empty()) {
                cur.fail("'dims' needs at least one local dimension");
            }
            total = 1;
            for (Eigen::Index d : dims) total *= d;
            matrix.resize(total, total);
            have_dims = true;
            continue;
        }
        if (row >= total) {
            cur.fail(fmt::format("unexpected extra row, matrix has {} rows", total));
        }
        for (Eigen::Index col = 0; col < total; ++col) {
            cur.expect('[');
            const double re = cur.number();
            cur.expect(',');
            const double im = cur.number();
            cur.expect(']');
            matrix(row, col) = Complex(re, im);
        }
        if (!cur.done()) {
            cur.fail(fmt::format("trailing content after {} entries", total));
        }
        ++row;
    }
    if (!have_dims) {
        throw OperatorFileError(lineno + 1, 1, "missing 'dims' header");
    }
    if (row < total) {
        throw OperatorFileError(lineno + 1, 1,
                                fmt::format("expected {} matrix rows, got {}", total, row));
    }
    if (!matrix.allFinite()) {
        throw OperatorFileError(1, 1, "matrix entries must be finite");
    }
    return {std::move(matrix), SpaceStructure(std::move(dims))};
}

OperatorOnSpace read_operator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw OperatorFileError(0, 0, fmt::format("cannot open '{}'", path));
    }
    return read_operator_file(in);
}

void write_operator_file(std::ostream& out, const OperatorOnSpace& op) {
    out << "dims";
    for (Eigen::Index d : op.structure.local_dims()) out << ' ' << d;
    out << '\n';
    for (Eigen::Index i = 0; i < op.matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < op.matrix.cols(); ++j) {
            if (j) out << ' ';
            out << fmt::format("[{},{}]", op.matrix(i, j).real(), op.matrix(i, j).imag());
        }
        out << '\n';
    }
}

} // namespace entprod::cli
