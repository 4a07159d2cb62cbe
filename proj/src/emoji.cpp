#include "ptdial/emoji.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>

namespace ptdial {

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    const auto* s = reinterpret_cast<const unsigned char*>(text.data());
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char b = s[i];
        char32_t cp = 0xFFFD;
        std::size_t len = 1;
        if (b < 0x80) {
            cp = b;
        } else if ((b & 0xE0) == 0xC0 && i + 1 < n && (s[i + 1] & 0xC0) == 0x80) {
            cp = (char32_t(b & 0x1F) << 6) | (s[i + 1] & 0x3F);
            len = 2;
            if (cp < 0x80) cp = 0xFFFD;
        } else if ((b & 0xF0) == 0xE0 && i + 2 < n && (s[i + 1] & 0xC0) == 0x80 &&
                   (s[i + 2] & 0xC0) == 0x80) {
            cp = (char32_t(b & 0x0F) << 12) | (char32_t(s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F);
            len = 3;
            if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
        } else if ((b & 0xF8) == 0xF0 && i + 3 < n && (s[i + 1] & 0xC0) == 0x80 &&
                   (s[i + 2] & 0xC0) == 0x80 && (s[i + 3] & 0xC0) == 0x80) {
            cp = (char32_t(b & 0x07) << 18) | (char32_t(s[i + 1] & 0x3F) << 12) |
                 (char32_t(s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
            len = 4;
            if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
        }
        if (cp == 0xFFFD) len = (b < 0x80) ? 1 : len;
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(std::u32string_view codepoints) {
    std::string out;
    out.reserve(codepoints.size() * 4);
    for (char32_t cp : codepoints) {
        if (cp < 0x80) {
            out.push_back(char(cp));
        } else if (cp < 0x800) {
            out.push_back(char(0xC0 | (cp >> 6)));
            out.push_back(char(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(char(0xE0 | (cp >> 12)));
            out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(char(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(char(0xF0 | (cp >> 18)));
            out.push_back(char(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(char(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

namespace {

// Pinned emoji property data, pasted in at configure time.
constexpr std::string_view kEmojiPropertyData =
#include "emoji_data.inc"
    ;

struct PropRange {
    char32_t lo;
    char32_t hi;
};

// One table per property, each sorted and non-overlapping.
struct PropTables {
    std::vector<PropRange> by_bit[6];
};

int property_slot(std::string_view name) {
    if (name == "Emoji") return 0;
    if (name == "Emoji_Presentation") return 1;
    if (name == "Emoji_Modifier") return 2;
    if (name == "Emoji_Modifier_Base") return 3;
    if (name == "Emoji_Component") return 4;
    if (name == "Extended_Pictographic") return 5;
    return -1;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

char32_t parse_hex(std::string_view s) {
    unsigned long v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v, 16);
    return static_cast<char32_t>(v);
}

PropTables build_ranges() {
    PropTables tables;
    std::string_view data = kEmojiPropertyData;
    std::size_t pos = 0;
    while (pos < data.size()) {
        std::size_t eol = data.find('\n', pos);
        if (eol == std::string_view::npos) eol = data.size();
        std::string_view line = strip(data.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty() || line.front() == '#') continue;
        std::size_t semi = line.find(';');
        if (semi == std::string_view::npos) continue;
        std::string_view range = strip(line.substr(0, semi));
        int slot = property_slot(strip(line.substr(semi + 1)));
        if (slot < 0) continue;
        char32_t lo, hi;
        std::size_t dots = range.find("..");
        if (dots == std::string_view::npos) {
            lo = hi = parse_hex(range);
        } else {
            lo = parse_hex(range.substr(0, dots));
            hi = parse_hex(range.substr(dots + 2));
        }
        tables.by_bit[slot].push_back({lo, hi});
    }
    for (auto& t : tables.by_bit) {
        std::sort(t.begin(), t.end(),
                  [](const PropRange& a, const PropRange& b) { return a.lo < b.lo; });
    }
    return tables;
}

const PropTables& tables() {
    static const PropTables t = build_ranges();
    return t;
}

bool in_table(const std::vector<PropRange>& t, char32_t cp) {
    auto it = std::upper_bound(t.begin(), t.end(), cp,
                               [](char32_t c, const PropRange& r) { return c < r.lo; });
    return it != t.begin() && cp <= std::prev(it)->hi;
}

constexpr char32_t kZwj = 0x200D;
constexpr char32_t kVs16 = 0xFE0F;
constexpr char32_t kKeycap = 0x20E3;
constexpr char32_t kTagFirst = 0xE0020;
constexpr char32_t kTagCancel = 0xE007F;

bool is_regional_indicator(char32_t cp) { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }

bool is_keycap_base(char32_t cp) {
    return cp == U'#' || cp == U'*' || (cp >= U'0' && cp <= U'9');
}

// One pictographic core: EP base (default emoji presentation, or text
// presentation promoted by VS16), then optional VS16, skin-tone modifier and
// tag run. Returns codepoints consumed, 0 if cps[i] does not start a core.
std::size_t pictographic_core(const std::u32string& cps, std::size_t i) {
    const std::size_t n = cps.size();
    unsigned base = emoji_properties(cps[i]);
    if (!(base & kExtendedPictographic)) return 0;
    bool presented = (base & kEmojiPresentation) != 0;
    if (!presented && !(i + 1 < n && cps[i + 1] == kVs16)) return 0;
    std::size_t j = i + 1;
    if (j < n && cps[j] == kVs16) ++j;
    if (j < n && (emoji_properties(cps[j]) & kEmojiModifier) && (base & kEmojiModifierBase)) ++j;
    if (j < n && cps[j] >= kTagFirst && cps[j] <= kTagCancel) {
        while (j < n && cps[j] >= kTagFirst && cps[j] < kTagCancel) ++j;
        if (j < n && cps[j] == kTagCancel) ++j;
    }
    return j - i;
}

// Maximal emoji sequence starting at i, or 0.
std::size_t emoji_unit(const std::u32string& cps, std::size_t i) {
    const std::size_t n = cps.size();
    if (is_regional_indicator(cps[i])) {
        return (i + 1 < n && is_regional_indicator(cps[i + 1])) ? 2 : 1;
    }
    if (is_keycap_base(cps[i])) {
        if (i + 2 < n && cps[i + 1] == kVs16 && cps[i + 2] == kKeycap) return 3;
        if (i + 1 < n && cps[i + 1] == kKeycap) return 2;
        return 0;
    }
    std::size_t core = pictographic_core(cps, i);
    if (core == 0) {
        // A skin-tone swatch on its own still displays as an emoji.
        return (emoji_properties(cps[i]) & kEmojiModifier) ? 1 : 0;
    }
    std::size_t j = i + core;
    while (j + 1 < n && cps[j] == kZwj) {
        std::size_t next = pictographic_core(cps, j + 1);
        if (next == 0) break;
        j += 1 + next;
    }
    return j - i;
}

} // namespace

unsigned emoji_properties(char32_t cp) {
    const PropTables& t = tables();
    unsigned bits = 0;
    for (int slot = 0; slot < 6; ++slot) {
        if (in_table(t.by_bit[slot], cp)) bits |= 1u << slot;
    }
    return bits;
}

std::vector<std::string> extract_emojis(std::string_view text) {
    std::u32string cps = decode_utf8(text);
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < cps.size()) {
        std::size_t len = emoji_unit(cps, i);
        if (len == 0) {
            ++i;
            continue;
        }
        out.push_back(encode_utf8(std::u32string_view(cps).substr(i, len)));
        i += len;
    }
    return out;
}

} // namespace ptdial
