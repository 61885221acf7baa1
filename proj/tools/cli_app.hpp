#pragma once

// The `pallino` command-line tool. Every subcommand is a thin adapter over
// one library call plus the module's documented text format; run() is kept
// separate from main() so the conformance tests can drive it in-process.
//
// Exit codes: 0 success, 1 domain errors (failed validation, cipher errors,
// unreadable files), 2 usage errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pallino/pallino.hpp"

namespace pallino::cli {

inline std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

inline PegKey load_peg_key(const std::string& spec, std::istream& in) {
    if (spec == "default") return peg_default_key();
    return peg_key_load(read_source(spec, in));
}

/// `--feed` accepts a feed literal directly or the name of a file holding one.
inline std::vector<Color> load_feed(const std::string& value, std::istream& in) {
    if (value == "-") return feed_parse(read_source(value, in));
    if (std::ifstream file(value); file) {
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return feed_parse(buffer.str());
    }
    return feed_parse(value);
}

inline std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> words;
    std::istringstream stream(text);
    for (std::string word; stream >> word;) words.push_back(word);
    return words;
}

inline std::string format_score(double score) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", score);
    return buffer;
}

inline int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Toolkit for ball-mosaic coding cards, grid-drawing programs,\n"
                 "classroom ciphers and the ball-machine simulator.",
                 "pallino"};
    app.require_subcommand(1);

    struct {
        std::string file;
        std::string second_file;
        std::string key = "default";
        std::string freq_file;
        std::string feed;
        std::string word;
        int shift = 0;
        int rows = 16;
        int cols = 12;
        std::uint64_t seed = 0;
        bool backwards = false;
        bool full = false;
        bool answers = false;
    } opt;

    int status = 0;

    // --- card ---------------------------------------------------------------
    auto* card = app.add_subcommand("card", "coding-card language");
    card->require_subcommand(1);

    auto* card_exec = card->add_subcommand("exec", "execute a card into its mosaic");
    card_exec->add_option("file", opt.file, "card file or -")->required();
    card_exec->callback(
        [&] { out << mosaic_render(execute(card_parse(read_source(opt.file, in)))) << '\n'; });

    auto* card_encode = card->add_subcommand("encode", "write the canonical card for a mosaic");
    card_encode->add_option("file", opt.file, "mosaic file or -")->required();
    card_encode->callback(
        [&] { out << card_print(encode(mosaic_parse(read_source(opt.file, in)))) << '\n'; });

    auto* card_validate = card->add_subcommand("validate", "check the row-sum rule");
    card_validate->add_option("file", opt.file, "card file or -")->required();
    card_validate->callback([&] {
        const CardReport report = validate(card_parse(read_source(opt.file, in)));
        if (report.ok()) {
            out << "OK\n";
        } else {
            for (const RowSumViolation& v : report.row_sums)
                err << "RowSum row " << v.label << ": " << v.sum << " != " << v.expected << '\n';
            status = 1;
        }
    });

    auto* card_normalize = card->add_subcommand("normalize", "merge adjacent same-color runs");
    card_normalize->add_option("file", opt.file, "card file or -")->required();
    card_normalize->callback(
        [&] { out << card_print(normalize(card_parse(read_source(opt.file, in)))) << '\n'; });

    auto* card_print_cmd = card->add_subcommand("print", "reprint a card in canonical form");
    card_print_cmd->add_option("file", opt.file, "card file or -")->required();
    card_print_cmd->callback(
        [&] { out << card_print(card_parse(read_source(opt.file, in))) << '\n'; });

    auto* card_diff = card->add_subcommand("diff", "list cell mismatches between two mosaics");
    card_diff->add_option("target", opt.file, "target mosaic file or -")->required();
    card_diff->add_option("actual", opt.second_file, "actual mosaic file or -")->required();
    card_diff->callback([&] {
        const Mosaic target = mosaic_parse(read_source(opt.file, in));
        const Mosaic actual = mosaic_parse(read_source(opt.second_file, in));
        const std::vector<CellDiff> mismatches = diff(target, actual);
        for (const CellDiff& d : mismatches)
            out << d.row_label << d.column << ": expected " << cell_code(d.expected) << ", got "
                << cell_code(d.actual) << '\n';
        if (!mismatches.empty()) status = 1;
    });

    auto* card_ws = card->add_subcommand("worksheet", "mosaic exercise with a card answer key");
    card_ws->add_option("file", opt.file, "mosaic file or -")->required();
    card_ws->add_flag("--answers", opt.answers, "include the answer key");
    card_ws->callback([&] {
        out << worksheet_render(worksheet_cards(mosaic_parse(read_source(opt.file, in))),
                                opt.answers);
    });

    // --- turtle ---------------------------------------------------------------
    auto* turtle = app.add_subcommand("turtle", "directional drawing language");
    turtle->require_subcommand(1);

    auto* turtle_run = turtle->add_subcommand("run", "interpret a program on a grid");
    turtle_run->add_option("file", opt.file, "program file or -")->required();
    turtle_run->add_option("--rows", opt.rows, "grid height")->required()->check(CLI::PositiveNumber);
    turtle_run->add_option("--cols", opt.cols, "grid width")->required()->check(CLI::PositiveNumber);
    turtle_run->callback([&] {
        const PaintedGrid painted =
            interpret(turtle_parse(read_source(opt.file, in)), opt.cols, opt.rows);
        out << grid_render(painted.grid) << '\n';
        out << "cursor " << painted.cursor.row << ' ' << painted.cursor.col << '\n';
    });

    auto* turtle_fmt = turtle->add_subcommand("fmt", "reprint a program in canonical form");
    turtle_fmt->add_option("file", opt.file, "program file or -")->required();
    turtle_fmt->callback(
        [&] { out << turtle_print(turtle_parse(read_source(opt.file, in))) << '\n'; });

    auto* turtle_compile = turtle->add_subcommand("compile", "write a program that draws a mosaic");
    turtle_compile->add_option("file", opt.file, "mosaic file or -")->required();
    turtle_compile->callback([&] {
        out << turtle_print(compile(to_color_grid(mosaic_parse(read_source(opt.file, in)))))
            << '\n';
    });

    // --- caesar ---------------------------------------------------------------
    auto* caesar = app.add_subcommand("caesar", "shift cipher");
    caesar->require_subcommand(1);

    auto* caesar_enc = caesar->add_subcommand("enc", "encrypt");
    caesar_enc->add_option("--shift", opt.shift, "shift key")->required();
    caesar_enc->add_option("file", opt.file, "text file or -")->required();
    caesar_enc->callback(
        [&] { out << caesar_encrypt(read_source(opt.file, in), CaesarKey(opt.shift)); });

    auto* caesar_dec = caesar->add_subcommand("dec", "decrypt");
    caesar_dec->add_option("--shift", opt.shift, "shift key")->required();
    caesar_dec->add_option("file", opt.file, "text file or -")->required();
    caesar_dec->callback(
        [&] { out << caesar_decrypt(read_source(opt.file, in), CaesarKey(opt.shift)); });

    auto* caesar_crack_cmd = caesar->add_subcommand("crack", "rank all 26 shifts by chi-squared");
    caesar_crack_cmd->add_option("--freq", opt.freq_file, "frequency table file (26 numbers)");
    caesar_crack_cmd->add_option("file", opt.file, "ciphertext file or -")->required();
    caesar_crack_cmd->callback([&] {
        const FrequencyTable table = opt.freq_file.empty()
                                         ? english_frequencies()
                                         : frequency_table_parse(read_source(opt.freq_file, in));
        for (const ShiftScore& entry : caesar_crack(read_source(opt.file, in), table))
            out << entry.shift << ' ' << format_score(entry.score) << '\n';
    });

    // --- pigpen ---------------------------------------------------------------
    auto* pigpen = app.add_subcommand("pigpen", "symbol substitution cipher");
    pigpen->require_subcommand(1);

    auto* pigpen_enc = pigpen->add_subcommand("enc", "encode words to symbol tokens");
    pigpen_enc->add_option("file", opt.file, "text file or -")->required();
    pigpen_enc->callback([&] {
        const PigpenTable table = PigpenTable::classic();
        std::string line;
        for (const std::string& word : split_words(read_source(opt.file, in))) {
            if (!line.empty()) line += " / ";
            line += pigpen_tokens_print(pigpen_encode(word, table));
        }
        out << line << '\n';
    });

    auto* pigpen_dec = pigpen->add_subcommand("dec", "decode symbol tokens");
    pigpen_dec->add_option("file", opt.file, "token file or -")->required();
    pigpen_dec->callback([&] {
        const PigpenTable table = PigpenTable::classic();
        std::string text = read_source(opt.file, in);
        std::string line;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t slash = text.find('/', start);
            const std::string chunk =
                text.substr(start, slash == std::string::npos ? slash : slash - start);
            const std::vector<PigpenSymbol> symbols = pigpen_tokens_parse(chunk);
            if (!symbols.empty()) {
                if (!line.empty()) line += ' ';
                line += pigpen_decode(symbols, table);
            }
            if (slash == std::string::npos) break;
            start = slash + 1;
        }
        out << line << '\n';
    });

    // --- peg ---------------------------------------------------------------
    auto* peg = app.add_subcommand("peg", "color-pair square cipher");
    peg->require_subcommand(1);

    auto* peg_enc = peg->add_subcommand("enc", "encrypt a word to color pairs");
    peg_enc->add_option("--key", opt.key, "key file or 'default'");
    peg_enc->add_flag("--backwards", opt.backwards, "reverse the pair sequence");
    peg_enc->add_option("word", opt.word, "word to encrypt")->required();
    peg_enc->callback([&] {
        out << peg_pairs_print(peg_encrypt(opt.word, load_peg_key(opt.key, in), opt.backwards))
            << '\n';
    });

    auto* peg_dec = peg->add_subcommand("dec", "decrypt a color-pair message");
    peg_dec->add_option("--key", opt.key, "key file or 'default'");
    peg_dec->add_flag("--backwards", opt.backwards, "pairs are reversed");
    peg_dec->add_option("message", opt.word, "pairs, e.g. 'WR WW WO', words split by /")
        ->required();
    peg_dec->callback([&] {
        const PegKey key = load_peg_key(opt.key, in);
        std::string line;
        for (const std::vector<ColorPair>& word : peg_message_parse(opt.word)) {
            if (!line.empty()) line += ' ';
            line += peg_decrypt(word, key, opt.backwards);
        }
        out << line << '\n';
    });

    auto* peg_keygen_cmd = peg->add_subcommand("keygen", "derive a fresh key from a seed");
    peg_keygen_cmd->add_option("--seed", opt.seed, "64-bit seed")->required();
    peg_keygen_cmd->callback([&] { out << peg_key_save(peg_keygen(opt.seed)) << '\n'; });

    auto* peg_ws = peg->add_subcommand("worksheet", "decoding exercises for a word list");
    peg_ws->add_option("--key", opt.key, "key file or 'default'");
    peg_ws->add_flag("--backwards", opt.backwards, "reverse each pair sequence");
    peg_ws->add_flag("--answers", opt.answers, "include the answer key");
    peg_ws->add_option("file", opt.file, "word list file or -")->required();
    peg_ws->callback([&] {
        const std::vector<std::string> words = split_words(read_source(opt.file, in));
        out << worksheet_render(worksheet_cipher(words, load_peg_key(opt.key, in), opt.backwards),
                                opt.answers);
    });

    // --- sim ---------------------------------------------------------------
    auto* sim = app.add_subcommand("sim", "ball machine simulator");
    sim->require_subcommand(1);

    auto* sim_run = sim->add_subcommand("run", "run a launch/exit/reset script");
    sim_run->add_option("--feed", opt.feed, "feed literal (color codes) or feed file")->required();
    sim_run->add_option("--rows", opt.rows, "screen rows")->check(CLI::PositiveNumber);
    sim_run->add_option("file", opt.file, "script file or -")->required();
    sim_run->callback([&] {
        const MachineState machine(load_feed(opt.feed, in), opt.rows);
        const ScriptResult result = run_script(machine, read_source(opt.file, in));
        out << mosaic_render(result.state.grid()) << '\n';
        out << feed_print(result.state.feed()) << '\n';
        for (const std::string& peek : result.log) out << "P " << peek << '\n';
        if (!result.ok()) {
            err << "command " << result.failure->command_index << " (line "
                << result.failure->line << "): " << result.failure->message << '\n';
            status = 1;
        }
    });

    // --- mosaic ---------------------------------------------------------------
    auto* mosaic = app.add_subcommand("mosaic", "mosaic utilities");
    mosaic->require_subcommand(1);

    auto* mosaic_random = mosaic->add_subcommand("random", "seeded gravity-valid mosaic");
    mosaic_random->add_option("--seed", opt.seed, "64-bit seed")->required();
    mosaic_random->add_option("--rows", opt.rows, "rows")->check(CLI::PositiveNumber);
    mosaic_random->add_option("--cols", opt.cols, "columns")->check(CLI::PositiveNumber);
    mosaic_random->add_flag("--full", opt.full, "fill every cell");
    mosaic_random->callback([&] {
        SplitMix64 rng(opt.seed);
        out << mosaic_render(random_mosaic(rng, opt.rows, opt.cols, opt.full)) << '\n';
    });

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        err << app.help();
        return 2;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return status;
}

}  // namespace pallino::cli
