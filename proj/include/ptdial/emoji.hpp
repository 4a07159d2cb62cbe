#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ptdial {

// UTF-8 <-> codepoint conversion. Decoding is lenient: malformed byte
// sequences decode to U+FFFD one byte at a time.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view codepoints);

// Emoji character properties (UTS #51 names), loaded from the bundled
// data/emoji_properties.txt, which is compiled into the library.
enum EmojiProp : unsigned {
    kEmoji = 1u << 0,
    kEmojiPresentation = 1u << 1,
    kEmojiModifier = 1u << 2,
    kEmojiModifierBase = 1u << 3,
    kEmojiComponent = 1u << 4,
    kExtendedPictographic = 1u << 5,
};

unsigned emoji_properties(char32_t cp);

inline bool has_emoji_property(char32_t cp) { return emoji_properties(cp) != 0; }

// All maximal emoji sequences in the text, in occurrence order, each returned
// as its own UTF-8 string. A sequence is one presented emoji: a pictographic
// base with optional VS16, skin-tone modifier and tag characters, joined to
// further bases by ZWJ; a regional-indicator flag pair; or a keycap sequence.
// Text-presentation characters without VS16 (plain digits, (c), ...) are not
// extracted.
std::vector<std::string> extract_emojis(std::string_view text);

} // namespace ptdial
