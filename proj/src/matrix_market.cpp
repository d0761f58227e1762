#include "kf/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kf/errors.hpp"

namespace kf {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

struct LineReader {
    std::istream& in;
    std::size_t line_no = 0;

    // next non-blank, non-comment line; false at EOF
    bool next(std::string& out) {
        std::string s;
        while (std::getline(in, s)) {
            ++line_no;
            std::size_t start = s.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (s[start] == '%') continue;
            out = s;
            return true;
        }
        return false;
    }
};

double parse_number(std::istringstream& iss, const LineReader& lr, const char* what) {
    double x;
    if (!(iss >> x)) throw ParseError(lr.line_no, std::string("expected ") + what);
    if (!std::isfinite(x)) throw ParseError(lr.line_no, std::string("non-finite ") + what);
    return x;
}

std::size_t parse_index(std::istringstream& iss, const LineReader& lr, const char* what) {
    long long v;
    if (!(iss >> v) || v < 0) throw ParseError(lr.line_no, std::string("expected ") + what);
    return static_cast<std::size_t>(v);
}

void expect_line_end(std::istringstream& iss, const LineReader& lr) {
    std::string rest;
    if (iss >> rest) throw ParseError(lr.line_no, "unexpected trailing data '" + rest + "'");
}

}  // namespace

Matrix parse_matrix_market(std::istream& in) {
    LineReader lr{in};
    std::string header;
    if (!std::getline(in, header)) throw ParseError(1, "empty input");
    lr.line_no = 1;
    {
        std::istringstream iss(header);
        std::string banner, object, format, field, symmetry;
        iss >> banner >> object >> format >> field >> symmetry;
        if (banner != "%%MatrixMarket")
            throw ParseError(1, "missing %%MatrixMarket banner");
        if (lower(object) != "matrix")
            throw UnsupportedFormatError("object '" + object + "' not supported");
        format = lower(format);
        field = lower(field);
        symmetry = lower(symmetry);
        if (format != "array" && format != "coordinate")
            throw UnsupportedFormatError("format '" + format + "' not supported");
        if (field != "real" && field != "complex")
            throw UnsupportedFormatError("field '" + field + "' not supported");
        if (symmetry != "general")
            throw UnsupportedFormatError("symmetry '" + symmetry + "' not supported");

        bool complex_field = field == "complex";
        std::string line;
        if (!lr.next(line)) throw ParseError(lr.line_no, "missing size line");
        std::istringstream sz(line);

        if (format == "array") {
            std::size_t rows = parse_index(sz, lr, "row count");
            std::size_t cols = parse_index(sz, lr, "column count");
            expect_line_end(sz, lr);
            if (rows == 0 || cols == 0) throw ParseError(lr.line_no, "empty matrix dimensions");
            Matrix m(rows, cols);
            // array data runs down column by column
            for (std::size_t j = 0; j < cols; ++j)
                for (std::size_t i = 0; i < rows; ++i) {
                    if (!lr.next(line)) throw ParseError(lr.line_no, "unexpected end of array data");
                    std::istringstream iss(line);
                    double re = parse_number(iss, lr, "value");
                    double im = complex_field ? parse_number(iss, lr, "imaginary part") : 0.0;
                    expect_line_end(iss, lr);
                    m(i, j) = Complex{re, im};
                }
            if (lr.next(line)) throw ParseError(lr.line_no, "trailing data after array entries");
            return m;
        }

        // coordinate
        std::size_t rows = parse_index(sz, lr, "row count");
        std::size_t cols = parse_index(sz, lr, "column count");
        std::size_t nnz = parse_index(sz, lr, "entry count");
        expect_line_end(sz, lr);
        if (rows == 0 || cols == 0) throw ParseError(lr.line_no, "empty matrix dimensions");
        Matrix m(rows, cols);
        for (std::size_t k = 0; k < nnz; ++k) {
            if (!lr.next(line)) throw ParseError(lr.line_no, "unexpected end of coordinate data");
            std::istringstream iss(line);
            std::size_t i = parse_index(iss, lr, "row index");
            std::size_t j = parse_index(iss, lr, "column index");
            if (i < 1 || i > rows || j < 1 || j > cols)
                throw ParseError(lr.line_no, "coordinate index out of range");
            double re = parse_number(iss, lr, "value");
            double im = complex_field ? parse_number(iss, lr, "imaginary part") : 0.0;
            expect_line_end(iss, lr);
            m(i - 1, j - 1) += Complex{re, im};
        }
        if (lr.next(line)) throw ParseError(lr.line_no, "trailing data after coordinate entries");
        return m;
    }
}

Matrix parse_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_matrix_market(in);
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

bool has_imaginary(const Matrix& m) {
    for (const Complex& v : m.data)
        if (v.imag() != 0.0) return true;
    return false;
}

}  // namespace

void write_matrix_market(std::ostream& out, const Matrix& m) {
    bool complex_field = has_imaginary(m);
    out << "%%MatrixMarket matrix array " << (complex_field ? "complex" : "real")
        << " general\n";
    out << m.rows << " " << m.cols << "\n";
    for (std::size_t j = 0; j < m.cols; ++j)
        for (std::size_t i = 0; i < m.rows; ++i) {
            const Complex& v = m(i, j);
            out << format_double(v.real());
            if (complex_field) out << " " << format_double(v.imag());
            out << "\n";
        }
}

void write_matrix_market_file(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write_matrix_market(out, m);
}

void write_unit_lower_coordinate(std::ostream& out, const UnitLowerTriangular& t) {
    bool complex_field = false;
    for (const Complex& v : t.strict)
        if (v.imag() != 0.0) complex_field = true;
    std::size_t nnz = t.n;
    for (const Complex& v : t.strict)
        if (v != Complex{}) ++nnz;
    out << "%%MatrixMarket matrix coordinate " << (complex_field ? "complex" : "real")
        << " general\n";
    out << t.n << " " << t.n << " " << nnz << "\n";
    for (std::size_t i = 0; i < t.n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const Complex& v = t.entry(i, j);
            if (v == Complex{}) continue;
            out << (i + 1) << " " << (j + 1) << " " << format_double(v.real());
            if (complex_field) out << " " << format_double(v.imag());
            out << "\n";
        }
        out << (i + 1) << " " << (i + 1) << " " << format_double(1.0);
        if (complex_field) out << " " << format_double(0.0);
        out << "\n";
    }
}

void write_unit_lower_coordinate_file(const std::string& path, const UnitLowerTriangular& t) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write_unit_lower_coordinate(out, t);
}

Vector parse_vector(std::istream& in) {
    LineReader lr{in};
    Vector v;
    std::string line;
    while (lr.next(line)) {
        std::istringstream iss(line);
        double re = parse_number(iss, lr, "value");
        double im = 0.0;
        std::string rest;
        if (iss >> rest) {
            std::istringstream iss2(rest);
            if (!(iss2 >> im) || !std::isfinite(im))
                throw ParseError(lr.line_no, "expected imaginary part, got '" + rest + "'");
            expect_line_end(iss, lr);
        }
        v.push_back(Complex{re, im});
    }
    if (v.empty()) throw ParseError(lr.line_no, "empty vector file");
    return v;
}

Vector parse_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_vector(in);
}

void write_vector(std::ostream& out, const Vector& v) {
    bool complex_field = false;
    for (const Complex& x : v)
        if (x.imag() != 0.0) complex_field = true;
    for (const Complex& x : v) {
        out << format_double(x.real());
        if (complex_field) out << " " << format_double(x.imag());
        out << "\n";
    }
}

void write_vector_file(const std::string& path, const Vector& v) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write_vector(out, v);
}

}  // namespace kf
