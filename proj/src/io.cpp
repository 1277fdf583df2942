#include "rk/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "rk/errors.hpp"

namespace rk {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(std::string_view token, const std::string& origin, std::size_t line_no) {
    const std::string s(token);
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty()) {
        throw IoError(origin + ":" + std::to_string(line_no) + ": bad numeric entry '" + s + "'");
    }
    return value;
}

template <ScalarType T>
T parse_entry(std::string_view token, const std::string& origin, std::size_t line_no) {
    if constexpr (std::same_as<T, Complex>) {
        const std::size_t comma = token.find(',');
        if (comma == std::string_view::npos) {
            throw IoError(origin + ":" + std::to_string(line_no) +
                          ": complex entry must be re,im");
        }
        const double re = parse_double(token.substr(0, comma), origin, line_no);
        const double im = parse_double(token.substr(comma + 1), origin, line_no);
        return Complex(re, im);
    } else {
        if (token.find(',') != std::string_view::npos) {
            throw IoError(origin + ":" + std::to_string(line_no) +
                          ": complex entry in a real file");
        }
        return parse_double(token, origin, line_no);
    }
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    bool next(std::string_view& line) {
        if (pos >= text.size()) return false;
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        return true;
    }
};

struct Header {
    Field field;
    std::size_t dim1;
    std::size_t dim2; // unused for rkvec
};

std::size_t parse_count(std::string_view token, const std::string& origin, std::size_t line_no) {
    const std::string s(token);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || s.empty()) {
        throw IoError(origin + ":" + std::to_string(line_no) + ": bad count '" + s + "'");
    }
    return static_cast<std::size_t>(v);
}

Header parse_header(LineReader& reader, std::string_view magic, std::size_t dims,
                    const std::string& origin) {
    std::string_view line;
    if (!reader.next(line)) {
        throw IoError(origin + ": empty file");
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != 3 + dims || tokens[0] != magic || tokens[1] != "1") {
        throw IoError(origin + ":1: expected header '" + std::string(magic) +
                      " 1 <real|complex> <dims>'");
    }
    Field field;
    if (tokens[2] == "real") {
        field = Field::Real;
    } else if (tokens[2] == "complex") {
        field = Field::Complex;
    } else {
        throw IoError(origin + ":1: unknown field '" + std::string(tokens[2]) + "'");
    }
    Header h{field, parse_count(tokens[3], origin, 1),
             dims == 2 ? parse_count(tokens[4], origin, 1) : 0};
    return h;
}

template <ScalarType T>
Matrix<T> parse_matrix_body(LineReader& reader, std::size_t m, std::size_t n,
                            const std::string& origin) {
    if (m == 0 || n == 0) {
        throw IoError(origin + ":1: dimensions must be at least 1x1");
    }
    Matrix<T> a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        std::string_view line;
        if (!reader.next(line)) {
            throw IoError(origin + ": truncated matrix: expected " + std::to_string(m) +
                          " rows, got " + std::to_string(i));
        }
        const auto tokens = split_ws(line);
        if (tokens.size() != n) {
            throw IoError(origin + ":" + std::to_string(reader.line_no) + ": expected " +
                          std::to_string(n) + " entries, got " + std::to_string(tokens.size()));
        }
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = parse_entry<T>(tokens[j], origin, reader.line_no);
        }
    }
    std::string_view extra;
    while (reader.next(extra)) {
        if (!split_ws(extra).empty()) {
            throw IoError(origin + ":" + std::to_string(reader.line_no) +
                          ": trailing content after matrix body");
        }
    }
    return a;
}

template <ScalarType T>
Vector<T> parse_vector_body(LineReader& reader, std::size_t len, const std::string& origin) {
    if (len == 0) {
        throw IoError(origin + ":1: vector length must be at least 1");
    }
    Vector<T> v(len);
    for (std::size_t i = 0; i < len; ++i) {
        std::string_view line;
        if (!reader.next(line)) {
            throw IoError(origin + ": truncated vector: expected " + std::to_string(len) +
                          " entries, got " + std::to_string(i));
        }
        const auto tokens = split_ws(line);
        if (tokens.size() != 1) {
            throw IoError(origin + ":" + std::to_string(reader.line_no) +
                          ": expected one entry per line");
        }
        v[i] = parse_entry<T>(tokens[0], origin, reader.line_no);
    }
    std::string_view extra;
    while (reader.next(extra)) {
        if (!split_ws(extra).empty()) {
            throw IoError(origin + ":" + std::to_string(reader.line_no) +
                          ": trailing content after vector body");
        }
    }
    return v;
}

} // namespace

std::string format_entry(double x) { return format_double(x); }

std::string format_entry(const Complex& z) {
    return format_double(z.real()) + "," + format_double(z.imag());
}

std::string to_rkmat(const AnyMatrix& m) {
    return std::visit(
        [](const auto& a) {
            std::string out = "rkmat 1 ";
            out += field_name(a.field());
            out += ' ';
            out += std::to_string(a.rows());
            out += ' ';
            out += std::to_string(a.cols());
            out += '\n';
            for (std::size_t i = 0; i < a.rows(); ++i) {
                auto row = a.row(i);
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j != 0) out += ' ';
                    out += format_entry(row[j]);
                }
                out += '\n';
            }
            return out;
        },
        m);
}

std::string to_rkvec(const AnyVector& v) {
    return std::visit(
        [](const auto& vec) {
            using T = typename std::decay_t<decltype(vec)>::value_type;
            std::string out = "rkvec 1 ";
            out += field_name(field_of<T>);
            out += ' ';
            out += std::to_string(vec.size());
            out += '\n';
            for (const auto& e : vec) {
                out += format_entry(e);
                out += '\n';
            }
            return out;
        },
        v);
}

AnyMatrix parse_rkmat(const std::string& text, const std::string& origin) {
    LineReader reader{text};
    const Header h = parse_header(reader, "rkmat", 2, origin);
    if (h.field == Field::Real) {
        return parse_matrix_body<double>(reader, h.dim1, h.dim2, origin);
    }
    return parse_matrix_body<Complex>(reader, h.dim1, h.dim2, origin);
}

AnyVector parse_rkvec(const std::string& text, const std::string& origin) {
    LineReader reader{text};
    const Header h = parse_header(reader, "rkvec", 1, origin);
    if (h.field == Field::Real) {
        return parse_vector_body<double>(reader, h.dim1, origin);
    }
    return parse_vector_body<Complex>(reader, h.dim1, origin);
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed on '" + path.string() + "'");
    }
    return std::move(ss).str();
}

AnyMatrix read_matrix(const std::filesystem::path& path) {
    return parse_rkmat(read_text(path), path.string());
}

AnyVector read_vector(const std::filesystem::path& path) {
    return parse_rkvec(read_text(path), path.string());
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("write failed on '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() + "'");
    }
}

void write_matrix(const std::filesystem::path& path, const AnyMatrix& m) {
    write_text_atomic(path, to_rkmat(m));
}

void write_vector(const std::filesystem::path& path, const AnyVector& v) {
    write_text_atomic(path, to_rkvec(v));
}

} // namespace rk
