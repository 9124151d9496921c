#ifndef QFOURIER_TOOLS_CLI_UTIL_HPP
#define QFOURIER_TOOLS_CLI_UTIL_HPP

#include <qfourier/errors.hpp>
#include <qfourier/lattice.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace qfourier::cli {

/// "%.17g", with inf/nan spelled the way JSON consumers usually accept them
/// as strings.
inline std::string num(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Number as a JSON value; non-finite values become strings.
inline std::string json_num(double x) {
    return std::isfinite(x) ? num(x) : "\"" + num(x) + "\"";
}

inline std::string json_str(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

/// RFC 4180 quoting for fields with commas, quotes or line breaks.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

namespace detail {

inline bool parse_double(const std::string& s, double& out) {
    if (s.empty())
        return false;
    const char* b = s.data();
    if (*b == '+')
        ++b;
    auto [ptr, ec] = std::from_chars(b, s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace detail

/// Parses "re", "re+imi", "re-imi", "imi", "i", "-i".  Throws UsageError.
inline cplx parse_complex(std::string text) {
    std::string s;
    for (char c : text)
        if (c != ' ')
            s += c;
    const std::string bad = "cannot parse complex number '" + text + "' (use re or re+imi)";
    if (s.empty())
        throw UsageError(bad);
    double re = 0.0, im = 0.0;
    if (s.back() != 'i') {
        if (!detail::parse_double(s, re))
            throw UsageError(bad);
        return {re, 0.0};
    }
    s.pop_back();
    // Split at the last sign that is not an exponent sign or the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (im_part.empty() || im_part == "+")
        im = 1.0;
    else if (im_part == "-")
        im = -1.0;
    else if (!detail::parse_double(im_part, im))
        throw UsageError(bad);
    if (!re_part.empty() && !detail::parse_double(re_part, re))
        throw UsageError(bad);
    return {re, im};
}

/// "MIN:MAX" -> Window.  Throws UsageError.
inline Window parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("window must be MIN:MAX, got '" + text + "'");
    int lo = 0, hi = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    auto read = [&](const std::string& s, int& v) {
        const char* first = s.data();
        if (!s.empty() && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
        return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
    };
    if (!read(a, lo) || !read(b, hi))
        throw UsageError("window must be MIN:MAX with integers, got '" + text + "'");
    if (lo > hi)
        throw WindowError("window MIN must not exceed MAX, got '" + text + "'");
    return Window(lo, hi);
}

} // namespace qfourier::cli

#endif
