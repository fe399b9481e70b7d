#pragma once

#include <cctype>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orientseq/word.hpp"

namespace orientseq {

enum class SequenceFormat { Digits, Spaced };

// Shared wire format: contiguous digits while the alphabet fits them,
// space-separated decimal symbols beyond that.
inline SequenceFormat preferred_format(int k) {
    return k <= 10 ? SequenceFormat::Digits : SequenceFormat::Spaced;
}

inline std::string render_sequence(std::span<const Symbol> seq, SequenceFormat fmt) {
    std::string out;
    if (fmt == SequenceFormat::Digits) {
        out.reserve(seq.size());
        for (Symbol s : seq) {
            if (s < 0 || s > 9)
                throw std::invalid_argument("render_sequence: symbol does not fit one digit");
            out.push_back(static_cast<char>('0' + s));
        }
    } else {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(seq[i]);
        }
    }
    return out;
}

inline std::string render_sequence(std::span<const Symbol> seq, int k) {
    return render_sequence(seq, preferred_format(k));
}

inline std::string render_sequence(const Word& w) {
    return render_sequence(w.symbols(), w.alphabet());
}

// Parses either wire format; without an explicit format, any interior
// whitespace selects the spaced one.
inline std::vector<Symbol> parse_sequence(std::string_view text,
                                          std::optional<SequenceFormat> fmt = {}) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("parse_sequence: empty input");

    if (!fmt) {
        fmt = SequenceFormat::Digits;
        for (char c : text)
            if (std::isspace(static_cast<unsigned char>(c))) {
                fmt = SequenceFormat::Spaced;
                break;
            }
    }

    std::vector<Symbol> out;
    if (*fmt == SequenceFormat::Digits) {
        out.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("parse_sequence: expected a digit, got '" +
                                            std::string(1, c) + "'");
            out.push_back(c - '0');
        }
    } else {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= text.size()) break;
            long v = 0;
            bool any = false;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
                const char c = text[i];
                if (c < '0' || c > '9')
                    throw std::invalid_argument("parse_sequence: expected a number");
                v = v * 10 + (c - '0');
                if (v > 1'000'000) throw std::invalid_argument("parse_sequence: symbol too large");
                any = true;
                ++i;
            }
            if (any) out.push_back(static_cast<Symbol>(v));
        }
    }
    return out;
}

}  // namespace orientseq
