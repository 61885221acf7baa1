#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pallino/error.hpp"
#include "pallino/rng.hpp"

namespace pallino {

// ---------------------------------------------------------------------------
// Caesar
// ---------------------------------------------------------------------------

/// Shift key, normalized into [0, 25]. Shift 0 is the identity cipher.
struct CaesarKey {
    int shift = 0;

    explicit CaesarKey(int raw = 0) : shift(((raw % 26) + 26) % 26) {}
};

/// Shift every letter forward by the key, preserving case; everything else
/// passes through untouched.
inline std::string caesar_encrypt(std::string_view text, CaesarKey key) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch >= 'a' && ch <= 'z')
            out += static_cast<char>('a' + (ch - 'a' + key.shift) % 26);
        else if (ch >= 'A' && ch <= 'Z')
            out += static_cast<char>('A' + (ch - 'A' + key.shift) % 26);
        else
            out += ch;
    }
    return out;
}

inline std::string caesar_decrypt(std::string_view text, CaesarKey key) {
    return caesar_encrypt(text, CaesarKey(26 - key.shift));
}

/// Reference letter frequencies, index 0 = 'a'. Defaults to the usual
/// English percentages.
using FrequencyTable = std::array<double, 26>;

inline const FrequencyTable& english_frequencies() {
    static const FrequencyTable table{
        0.0817, 0.0129, 0.0278, 0.0425, 0.1270, 0.0223, 0.0202, 0.0609, 0.0697,
        0.0015, 0.0077, 0.0403, 0.0241, 0.0675, 0.0751, 0.0193, 0.0010, 0.0599,
        0.0633, 0.0906, 0.0276, 0.0098, 0.0236, 0.0015, 0.0197, 0.0007,
    };
    return table;
}

struct ShiftScore {
    int shift = 0;
    double score = 0.0;

    bool operator==(const ShiftScore&) const = default;
};

/// Score all 26 candidate shifts by the chi-squared distance between the
/// decrypted letter histogram and the reference table, best (lowest) first.
/// Ties keep the smaller shift first. Zero-frequency reference letters are
/// skipped.
inline std::vector<ShiftScore> caesar_crack(std::string_view ciphertext,
                                            const FrequencyTable& reference = english_frequencies()) {
    std::array<int, 26> histogram{};
    int letters = 0;
    for (char ch : ciphertext) {
        if (ch >= 'a' && ch <= 'z') {
            histogram[static_cast<std::size_t>(ch - 'a')]++;
            ++letters;
        } else if (ch >= 'A' && ch <= 'Z') {
            histogram[static_cast<std::size_t>(ch - 'A')]++;
            ++letters;
        }
    }
    if (letters == 0) fail(errc::no_letters, "ciphertext has no alphabetic characters");

    std::vector<ShiftScore> ranked;
    ranked.reserve(26);
    for (int shift = 0; shift < 26; ++shift) {
        double chi = 0.0;
        for (int letter = 0; letter < 26; ++letter) {
            const double expected = reference[static_cast<std::size_t>(letter)] * letters;
            if (expected <= 0.0) continue;
            // Decrypting by `shift` maps ciphertext letter (letter+shift) to `letter`.
            const int observed = histogram[static_cast<std::size_t>((letter + shift) % 26)];
            const double delta = observed - expected;
            chi += delta * delta / expected;
        }
        ranked.push_back({shift, chi});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const ShiftScore& a, const ShiftScore& b) { return a.score < b.score; });
    return ranked;
}

/// Table file: 26 whitespace-separated numbers in a..z order.
inline FrequencyTable frequency_table_parse(const std::string& text) {
    FrequencyTable table{};
    std::istringstream stream(text);
    for (std::size_t i = 0; i < 26; ++i) {
        if (!(stream >> table[i]))
            fail(errc::bad_key_format, "frequency table needs 26 numbers, got " + std::to_string(i));
        if (table[i] < 0.0)
            fail(errc::bad_key_format, "frequency table entries must be non-negative");
    }
    std::string extra;
    if (stream >> extra) fail(errc::bad_key_format, "frequency table has trailing data");
    return table;
}

// ---------------------------------------------------------------------------
// Pigpen
// ---------------------------------------------------------------------------

/// The four symbol families: two 3x3 grids (the second dotted) and two X
/// shapes (the second dotted).
enum class PigpenShape : std::uint8_t { grid1, grid2, x1, x2 };

/// Token text: `#<1-9>` grid1, `#<1-9>.` grid2, `x<1-4>` x1, `x<1-4>.` x2.
struct PigpenSymbol {
    PigpenShape shape = PigpenShape::grid1;
    int cell = 1;  // 1-9 for grids, 1-4 for X shapes

    bool dotted() const { return shape == PigpenShape::grid2 || shape == PigpenShape::x2; }

    std::string text() const {
        std::string out(shape == PigpenShape::grid1 || shape == PigpenShape::grid2 ? "#" : "x");
        out += std::to_string(cell);
        if (dotted()) out += '.';
        return out;
    }

    bool operator==(const PigpenSymbol&) const = default;
};

inline PigpenSymbol pigpen_symbol_parse(const std::string& token) {
    const auto reject = [&token]() -> PigpenSymbol {
        fail(errc::unknown_symbol, "'" + token + "' is not a pigpen token");
    };
    if (token.size() < 2) return reject();
    const bool grid = token[0] == '#';
    if (!grid && token[0] != 'x' && token[0] != 'X') return reject();
    std::string rest = token.substr(1);
    bool dotted = false;
    if (rest.back() == '.') {
        dotted = true;
        rest.pop_back();
    }
    if (rest.size() != 1 || !std::isdigit(static_cast<unsigned char>(rest[0]))) return reject();
    const int cell = rest[0] - '0';
    const int max_cell = grid ? 9 : 4;
    if (cell < 1 || cell > max_cell)
        fail(errc::unknown_symbol, "'" + token + "': cells are 1-" + std::to_string(max_cell));
    const PigpenShape shape = grid ? (dotted ? PigpenShape::grid2 : PigpenShape::grid1)
                                   : (dotted ? PigpenShape::x2 : PigpenShape::x1);
    return PigpenSymbol{shape, cell};
}

/// Letter-to-symbol bijection over A-Z.
class PigpenTable {
public:
    explicit PigpenTable(const std::array<PigpenSymbol, 26>& symbols) : symbols_(symbols) {
        for (std::size_t i = 0; i < 26; ++i) {
            const PigpenSymbol& s = symbols_[i];
            const int max_cell =
                (s.shape == PigpenShape::grid1 || s.shape == PigpenShape::grid2) ? 9 : 4;
            if (s.cell < 1 || s.cell > max_cell)
                throw std::invalid_argument("PigpenTable: symbol out of range");
            for (std::size_t j = 0; j < i; ++j)
                if (symbols_[j] == s) throw std::invalid_argument("PigpenTable: duplicate symbol");
        }
    }

    /// The usual arrangement: A-I fill the plain grid, J-R the dotted grid,
    /// S-V the plain X, W-Z the dotted X.
    static PigpenTable classic() {
        std::array<PigpenSymbol, 26> symbols{};
        for (int i = 0; i < 9; ++i) symbols[static_cast<std::size_t>(i)] = {PigpenShape::grid1, i + 1};
        for (int i = 0; i < 9; ++i)
            symbols[static_cast<std::size_t>(9 + i)] = {PigpenShape::grid2, i + 1};
        for (int i = 0; i < 4; ++i)
            symbols[static_cast<std::size_t>(18 + i)] = {PigpenShape::x1, i + 1};
        for (int i = 0; i < 4; ++i)
            symbols[static_cast<std::size_t>(22 + i)] = {PigpenShape::x2, i + 1};
        return PigpenTable(symbols);
    }

    PigpenSymbol symbol_for(char letter) const {
        const int upper = std::toupper(static_cast<unsigned char>(letter));
        if (upper < 'A' || upper > 'Z')
            fail(errc::unmappable_character, std::string("'") + letter + "' is not a letter");
        return symbols_[static_cast<std::size_t>(upper - 'A')];
    }

    char letter_for(const PigpenSymbol& symbol) const {
        for (std::size_t i = 0; i < 26; ++i)
            if (symbols_[i] == symbol) return static_cast<char>('A' + i);
        fail(errc::unknown_symbol, "'" + symbol.text() + "' is not in the table");
    }

    const std::array<PigpenSymbol, 26>& symbols() const { return symbols_; }

private:
    std::array<PigpenSymbol, 26> symbols_;
};

inline std::vector<PigpenSymbol> pigpen_encode(std::string_view word, const PigpenTable& table) {
    std::vector<PigpenSymbol> out;
    out.reserve(word.size());
    for (char ch : word) out.push_back(table.symbol_for(ch));
    return out;
}

inline std::string pigpen_decode(const std::vector<PigpenSymbol>& symbols,
                                 const PigpenTable& table) {
    std::string out;
    out.reserve(symbols.size());
    for (const PigpenSymbol& s : symbols) out += table.letter_for(s);
    return out;
}

inline std::string pigpen_tokens_print(const std::vector<PigpenSymbol>& symbols) {
    std::string out;
    for (const PigpenSymbol& s : symbols) {
        if (!out.empty()) out += ' ';
        out += s.text();
    }
    return out;
}

inline std::vector<PigpenSymbol> pigpen_tokens_parse(const std::string& text) {
    std::vector<PigpenSymbol> out;
    std::istringstream stream(text);
    for (std::string token; stream >> token;) out.push_back(pigpen_symbol_parse(token));
    return out;
}

// ---------------------------------------------------------------------------
// Peg Code
// ---------------------------------------------------------------------------

/// The five peg colors of the 5x5 square. One-letter codes: W O R G B.
enum class PegColor : std::uint8_t { white, orange, red, green, blue };

inline constexpr std::array<PegColor, 5> kAllPegColors{PegColor::white, PegColor::orange,
                                                       PegColor::red, PegColor::green,
                                                       PegColor::blue};

inline constexpr char peg_color_code(PegColor c) {
    constexpr char codes[] = {'W', 'O', 'R', 'G', 'B'};
    return codes[static_cast<std::size_t>(c)];
}

inline PegColor peg_color_from_code(char code) {
    switch (std::toupper(static_cast<unsigned char>(code))) {
        case 'W': return PegColor::white;
        case 'O': return PegColor::orange;
        case 'R': return PegColor::red;
        case 'G': return PegColor::green;
        case 'B': return PegColor::blue;
    }
    fail(errc::unknown_color, std::string("'") + code + "' is not one of W O R G B");
}

/// Row color first, column color second, the order the square is read in.
struct ColorPair {
    PegColor row = PegColor::white;
    PegColor col = PegColor::white;

    std::string text() const { return {peg_color_code(row), peg_color_code(col)}; }

    bool operator==(const ColorPair&) const = default;
};

/// The 25-letter alphabet of the square: A-Z with J folded onto I.
inline constexpr std::string_view kPegAlphabet = "ABCDEFGHIKLMNOPQRSTUVWXYZ";

/// A Peg Code key: an ordering of the five row pegs, an ordering of the five
/// column pegs, and a letter layout for the 25 cells (row-major from the top
/// left). Rekeying games permute any of the three.
class PegKey {
public:
    PegKey(const std::array<PegColor, 5>& row_colors, const std::array<PegColor, 5>& col_colors,
           const std::array<char, 25>& layout)
        : rows_(row_colors), cols_(col_colors), layout_(layout) {
        validate_permutation(rows_, "row");
        validate_permutation(cols_, "col");

        cell_of_.fill(-1);
        std::array<int, 26> seen{};
        for (int cell = 0; cell < 25; ++cell) {
            const char letter = layout_[static_cast<std::size_t>(cell)];
            if (kPegAlphabet.find(letter) == std::string_view::npos)
                fail(errc::non_bijective_layout,
                     std::string("'") + letter + "' is not in the 25-letter alphabet");
            seen[static_cast<std::size_t>(letter - 'A')]++;
            cell_of_[static_cast<std::size_t>(letter - 'A')] = cell;
        }
        for (char letter : kPegAlphabet)
            if (seen[static_cast<std::size_t>(letter - 'A')] != 1)
                fail(errc::non_bijective_layout,
                     std::string("letter ") + letter + " must appear exactly once");
        cell_of_['J' - 'A'] = cell_of_['I' - 'A'];  // the merged cell
    }

    const std::array<PegColor, 5>& row_colors() const { return rows_; }
    const std::array<PegColor, 5>& col_colors() const { return cols_; }
    const std::array<char, 25>& layout() const { return layout_; }

    char letter_at(int cell) const { return layout_.at(static_cast<std::size_t>(cell)); }

    int cell_of(char letter) const {
        const int upper = std::toupper(static_cast<unsigned char>(letter));
        if (upper < 'A' || upper > 'Z')
            fail(errc::unmappable_character, std::string("'") + letter + "' is not a letter");
        return cell_of_[static_cast<std::size_t>(upper - 'A')];
    }

    int row_index(PegColor c) const { return index_in(rows_, c); }
    int col_index(PegColor c) const { return index_in(cols_, c); }

    bool operator==(const PegKey& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && layout_ == other.layout_;
    }

private:
    static void validate_permutation(const std::array<PegColor, 5>& order, const char* what) {
        std::array<int, 5> seen{};
        for (PegColor c : order) seen[static_cast<std::size_t>(c)]++;
        for (int count : seen)
            if (count != 1)
                fail(errc::bad_color_permutation,
                     std::string(what) + " colors must be a permutation of W O R G B");
    }

    static int index_in(const std::array<PegColor, 5>& order, PegColor c) {
        for (int i = 0; i < 5; ++i)
            if (order[static_cast<std::size_t>(i)] == c) return i;
        return -1;  // unreachable: order is a verified permutation
    }

    std::array<PegColor, 5> rows_;
    std::array<PegColor, 5> cols_;
    std::array<char, 25> layout_;
    std::array<int, 26> cell_of_{};
};

/// The key printed in the manual: pegs in W O R G B order both ways, letters
/// in reading order (white+white = A, white+orange = B, white+red = C).
inline PegKey peg_default_key() {
    std::array<char, 25> layout{};
    std::copy(kPegAlphabet.begin(), kPegAlphabet.end(), layout.begin());
    return PegKey(kAllPegColors, kAllPegColors, layout);
}

/// Deterministic rekeying: row order, column order and letter layout are
/// shuffled (in that order) by the pinned seeded generator; see rng.hpp and
/// README "Seeded generation".
inline PegKey peg_keygen(std::uint64_t seed) {
    SplitMix64 rng(seed);

    std::vector<PegColor> rows(kAllPegColors.begin(), kAllPegColors.end());
    shuffle(rows, rng);
    std::vector<PegColor> cols(kAllPegColors.begin(), kAllPegColors.end());
    shuffle(cols, rng);
    std::vector<char> letters(kPegAlphabet.begin(), kPegAlphabet.end());
    shuffle(letters, rng);

    std::array<PegColor, 5> row_colors{};
    std::array<PegColor, 5> col_colors{};
    std::array<char, 25> layout{};
    std::copy(rows.begin(), rows.end(), row_colors.begin());
    std::copy(cols.begin(), cols.end(), col_colors.begin());
    std::copy(letters.begin(), letters.end(), layout.begin());
    return PegKey(row_colors, col_colors, layout);
}

/// Each letter becomes (row color, column color) of its cell. J shares I's
/// cell. With `backwards` set the pair sequence is reversed, the trickier
/// variant played under each letter row.
inline std::vector<ColorPair> peg_encrypt(std::string_view word, const PegKey& key,
                                          bool backwards = false) {
    std::vector<ColorPair> pairs;
    pairs.reserve(word.size());
    for (char ch : word) {
        const int cell = key.cell_of(ch);
        pairs.push_back(ColorPair{key.row_colors()[static_cast<std::size_t>(cell / 5)],
                                  key.col_colors()[static_cast<std::size_t>(cell % 5)]});
    }
    if (backwards) std::reverse(pairs.begin(), pairs.end());
    return pairs;
}

/// Inverse of peg_encrypt under the same flag. The merged cell reads as 'I'.
inline std::string peg_decrypt(std::vector<ColorPair> pairs, const PegKey& key,
                               bool backwards = false) {
    if (backwards) std::reverse(pairs.begin(), pairs.end());
    std::string word;
    word.reserve(pairs.size());
    for (const ColorPair& pair : pairs) {
        const int row = key.row_index(pair.row);
        const int col = key.col_index(pair.col);
        word += key.letter_at(row * 5 + col);
    }
    return word;
}

// Message text: pairs as two-letter tokens, words separated by '/',
// e.g. "WR WW WO / WW".

inline ColorPair peg_pair_parse(const std::string& token) {
    if (token.size() != 2)
        fail(errc::bad_pair, "'" + token + "' is not a two-color token");
    return ColorPair{peg_color_from_code(token[0]), peg_color_from_code(token[1])};
}

inline std::string peg_pairs_print(const std::vector<ColorPair>& pairs) {
    std::string out;
    for (const ColorPair& pair : pairs) {
        if (!out.empty()) out += ' ';
        out += pair.text();
    }
    return out;
}

inline std::vector<std::vector<ColorPair>> peg_message_parse(const std::string& text) {
    std::vector<std::vector<ColorPair>> words(1);
    std::istringstream stream(text);
    for (std::string token; stream >> token;) {
        if (token == "/") {
            if (!words.back().empty()) words.emplace_back();
        } else {
            words.back().push_back(peg_pair_parse(token));
        }
    }
    if (words.back().empty()) words.pop_back();
    return words;
}

inline std::string peg_message_print(const std::vector<std::vector<ColorPair>>& words) {
    std::string out;
    for (const std::vector<ColorPair>& word : words) {
        if (!out.empty()) out += " / ";
        out += peg_pairs_print(word);
    }
    return out;
}

// Key file: `ROWS <5 codes>`, `COLS <5 codes>`, then five lines of five
// letters, top row first, the merged I/J cell written I.

inline std::string peg_key_save(const PegKey& key) {
    std::string out = "ROWS";
    for (PegColor c : key.row_colors()) out += std::string(" ") + peg_color_code(c);
    out += "\nCOLS";
    for (PegColor c : key.col_colors()) out += std::string(" ") + peg_color_code(c);
    for (int row = 0; row < 5; ++row) {
        out += '\n';
        for (int col = 0; col < 5; ++col) {
            if (col > 0) out += ' ';
            out += key.letter_at(row * 5 + col);
        }
    }
    return out;
}

inline PegKey peg_key_load(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    for (std::string line; std::getline(stream, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
        lines.pop_back();
    if (lines.size() != 7)
        fail(errc::bad_key_format, "expected 7 lines, got " + std::to_string(lines.size()));

    const auto parse_colors = [](const std::string& line,
                                 const char* keyword) -> std::array<PegColor, 5> {
        std::istringstream tokens(line);
        std::string head;
        tokens >> head;
        if (head != keyword)
            fail(errc::bad_key_format, std::string("expected ") + keyword + " line, got '" + line + "'");
        std::vector<PegColor> colors;
        for (std::string token; tokens >> token;) {
            if (token.size() != 1)
                fail(errc::bad_color_permutation, "'" + token + "' is not a color code");
            try {
                colors.push_back(peg_color_from_code(token[0]));
            } catch (const Error&) {
                fail(errc::bad_color_permutation, "'" + token + "' is not one of W O R G B");
            }
        }
        if (colors.size() != 5)
            fail(errc::bad_color_permutation,
                 std::string(keyword) + " line must list 5 colors, got " +
                     std::to_string(colors.size()));
        std::array<PegColor, 5> out{};
        std::copy(colors.begin(), colors.end(), out.begin());
        return out;
    };

    const std::array<PegColor, 5> rows = parse_colors(lines[0], "ROWS");
    const std::array<PegColor, 5> cols = parse_colors(lines[1], "COLS");

    std::array<char, 25> layout{};
    for (int row = 0; row < 5; ++row) {
        std::istringstream tokens(lines[static_cast<std::size_t>(2 + row)]);
        int col = 0;
        for (std::string token; tokens >> token; ++col) {
            if (col >= 5 || token.size() != 1 || token[0] < 'A' || token[0] > 'Z')
                fail(errc::bad_key_format,
                     "layout line " + std::to_string(row + 1) + " must hold 5 letters");
            layout[static_cast<std::size_t>(row * 5 + col)] = token[0];
        }
        if (col != 5)
            fail(errc::bad_key_format,
                 "layout line " + std::to_string(row + 1) + " must hold 5 letters");
    }
    return PegKey(rows, cols, layout);  // permutation/bijection checks live in the ctor
}

}  // namespace pallino
