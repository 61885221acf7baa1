#pragma once

#include <string>
#include <vector>

#include "pallino/card.hpp"
#include "pallino/cipher.hpp"

namespace pallino {

/// A printable lesson sheet: exercise blocks plus withheld answers. Answers
/// render only when explicitly requested, so the same sheet serves both
/// sides of the desk.
struct Worksheet {
    std::string title;
    std::vector<std::string> body;
    std::vector<std::string> answers;

    bool operator==(const Worksheet&) const = default;
};

/// The two-card exercise: the sheet shows the mosaic, the answer key holds
/// the canonical coding card that reproduces it.
inline Worksheet worksheet_cards(const Mosaic& m) {
    Worksheet sheet;
    sheet.title = "Coding card worksheet";
    const std::string card_text = card_print(encode(m));  // validates the mosaic first
    const std::string mosaic_text = mosaic_render(m);
    if (!mosaic_text.empty()) sheet.body.push_back(mosaic_text);
    if (!card_text.empty()) sheet.answers.push_back(card_text);
    return sheet;
}

/// Decoding exercises: one color-pair line per word. With `backwards` the
/// pairs are reversed and the answer is presented reversed too, the way the
/// solution is written under each row.
inline Worksheet worksheet_cipher(const std::vector<std::string>& words, const PegKey& key,
                                  bool backwards = false) {
    Worksheet sheet;
    sheet.title = "Peg Code worksheet";
    for (const std::string& word : words) {
        sheet.body.push_back(peg_pairs_print(peg_encrypt(word, key, backwards)));
        std::string answer;
        for (char ch : word) answer += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (backwards) std::reverse(answer.begin(), answer.end());
        sheet.answers.push_back(answer);
    }
    return sheet;
}

/// Plain monospace rendering, blocks separated by blank lines. Ends with a
/// newline.
inline std::string worksheet_render(const Worksheet& sheet, bool with_answers = false) {
    std::string out = "== " + sheet.title + " ==\n";
    for (const std::string& block : sheet.body) {
        out += '\n';
        out += block;
        out += '\n';
    }
    if (with_answers && !sheet.answers.empty()) {
        out += "\n-- answer key --\n";
        for (const std::string& block : sheet.answers) {
            out += '\n';
            out += block;
            out += '\n';
        }
    }
    return out;
}

}  // namespace pallino
