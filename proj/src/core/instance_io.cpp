#include "lopant/instance_io.hpp"

#include "lopant/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace lopant {

namespace {

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (is_space(c)) {
            ++column;
            ++i;
            continue;
        }
        const std::size_t start = i;
        const std::size_t start_col = column;
        while (i < text.size() && !is_space(text[i])) {
            ++i;
            ++column;
        }
        tokens.push_back({text.substr(start, i - start), line, start_col});
    }
    return tokens;
}

bool parse_real(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

bool parse_integer(std::string_view s, std::int64_t& out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::string_view line_text(std::string_view text, std::size_t line) {
    std::size_t current = 1;
    std::size_t begin = 0;
    while (current < line) {
        begin = text.find('\n', begin);
        if (begin == std::string_view::npos) {
            return {};
        }
        ++begin;
        ++current;
    }
    std::size_t end = text.find('\n', begin);
    auto out = text.substr(begin, end == std::string_view::npos ? text.npos : end - begin);
    while (!out.empty() && is_space(out.front())) out.remove_prefix(1);
    while (!out.empty() && is_space(out.back())) out.remove_suffix(1);
    return out;
}

} // namespace

Instance parse_instance(std::string_view text, std::string name,
                        std::vector<std::string>* warnings) {
    const auto tokens = tokenize(text);
    std::size_t idx = 0;
    double probe = 0.0;
    if (!tokens.empty() && !parse_real(tokens[0].text, probe)) {
        const std::size_t header_line = tokens[0].line;
        if (name.empty()) {
            name = std::string(line_text(text, header_line));
        }
        while (idx < tokens.size() && tokens[idx].line == header_line) {
            ++idx;
        }
    }
    if (idx >= tokens.size()) {
        const std::size_t line = tokens.empty() ? 1 : tokens.back().line;
        throw ParseError(ErrorCode::InvalidHeader, "missing instance size", line, 1);
    }

    const Token& header = tokens[idx++];
    std::int64_t n_signed = 0;
    if (!parse_integer(header.text, n_signed)) {
        throw ParseError(ErrorCode::InvalidHeader,
                         "instance size '" + std::string(header.text) + "' is not an integer",
                         header.line, header.column);
    }
    if (n_signed <= 0 || n_signed > (std::int64_t{1} << 31)) {
        throw ParseError(ErrorCode::InvalidHeader,
                         "instance size must be positive, got " + std::to_string(n_signed),
                         header.line, header.column);
    }
    const auto n = static_cast<std::size_t>(n_signed);
    const std::size_t entries = n * n;
    const std::size_t available = tokens.size() - idx;
    if (available < entries) {
        const Token& last = tokens.back();
        throw ParseError(ErrorCode::Truncated,
                         "expected " + std::to_string(entries) + " matrix entries, found " +
                             std::to_string(available),
                         last.line, last.column + last.text.size());
    }

    std::vector<Weight> weights(entries);
    for (std::size_t k = 0; k < entries; ++k) {
        const Token& t = tokens[idx + k];
        if (!parse_real(t.text, weights[k])) {
            throw ParseError(ErrorCode::Parse,
                             "invalid matrix entry '" + std::string(t.text) + "'", t.line,
                             t.column);
        }
    }
    if (available > entries && warnings != nullptr) {
        warnings->push_back("ignoring " + std::to_string(available - entries) +
                            " trailing token(s) after the matrix");
    }
    return Instance(n, std::move(weights), std::move(name));
}

Instance read_instance_file(const std::filesystem::path& path,
                            std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LopError(ErrorCode::Io, "cannot open instance file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw LopError(ErrorCode::Io, "error reading instance file " + path.string());
    }
    return parse_instance(buffer.str(), path.stem().string(), warnings);
}

std::string write_instance(const Instance& instance) {
    const std::size_t n = instance.size();
    std::string out = std::to_string(n);
    out += '\n';
    char buf[64];
    for (Node i = 0; i < n; ++i) {
        const auto row = instance.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) out += ' ';
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, row[j]);
            out.append(buf, ptr);
        }
        out += '\n';
    }
    return out;
}

void write_instance_file(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw LopError(ErrorCode::Io, "cannot open " + path.string() + " for writing");
    }
    out << write_instance(instance);
    if (!out) {
        throw LopError(ErrorCode::Io, "error writing " + path.string());
    }
}

Instance generate_random_instance(std::size_t n, std::int64_t low, std::int64_t high,
                                  std::uint64_t seed, std::string name) {
    if (n < 1) {
        throw invalid_argument("instance size must be at least 1");
    }
    if (low > high) {
        throw invalid_argument("low bound " + std::to_string(low) +
                               " exceeds high bound " + std::to_string(high));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(low, high);
    std::vector<Weight> weights(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                weights[i * n + j] = static_cast<Weight>(dist(rng));
            }
        }
    }
    return Instance(n, std::move(weights), std::move(name));
}

} // namespace lopant
