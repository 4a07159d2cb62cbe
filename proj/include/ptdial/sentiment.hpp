#pragma once

#include <array>
#include <string_view>

#include "ptdial/errors.hpp"

namespace ptdial {

// Three-state sentiment label with the total order negative < neutral < positive.
// The underlying values carry the order, so the enum compares directly.
enum class Sentiment : int {
    negative = 0,
    neutral = 1,
    positive = 2,
};

inline constexpr std::array<Sentiment, 3> kAllSentiments = {
    Sentiment::negative, Sentiment::neutral, Sentiment::positive};

inline constexpr std::size_t index_of(Sentiment s) {
    return static_cast<std::size_t>(s);
}

constexpr std::string_view to_string(Sentiment s) {
    switch (s) {
        case Sentiment::negative: return "negative";
        case Sentiment::neutral: return "neutral";
        case Sentiment::positive: return "positive";
    }
    return "?";
}

inline Sentiment parse_sentiment(std::string_view text) {
    for (Sentiment s : kAllSentiments) {
        if (text == to_string(s)) return s;
    }
    throw ParseError("unknown sentiment label: '" + std::string(text) + "'");
}

} // namespace ptdial
