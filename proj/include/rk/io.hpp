#pragma once

#include <filesystem>
#include <string>

#include "rk/matrix.hpp"

namespace rk {

/// Text formats (diffable, exact round trip at 17 significant digits):
///   rkmat: line 1 `rkmat 1 <real|complex> <m> <n>`, then m lines of n entries
///          separated by single spaces; complex entries are `re,im`.
///   rkvec: line 1 `rkvec 1 <real|complex> <len>`, then one entry per line.

std::string format_entry(double x);
std::string format_entry(const Complex& z);

std::string to_rkmat(const AnyMatrix& m);
std::string to_rkvec(const AnyVector& v);

AnyMatrix parse_rkmat(const std::string& text, const std::string& origin = "<string>");
AnyVector parse_rkvec(const std::string& text, const std::string& origin = "<string>");

AnyMatrix read_matrix(const std::filesystem::path& path);
AnyVector read_vector(const std::filesystem::path& path);

void write_matrix(const std::filesystem::path& path, const AnyMatrix& m);
void write_vector(const std::filesystem::path& path, const AnyVector& v);

/// Writes via a temp file in the same directory followed by a rename, so a
/// failed run never leaves a partial file at `path`.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

std::string read_text(const std::filesystem::path& path);

} // namespace rk
