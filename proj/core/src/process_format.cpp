#include "bpmc/process_format.hpp"

#include "bpmc/errors.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace bpmc {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream stream(line);
    std::string word;
    while (stream >> word) words.push_back(word);
    return words;
}

bool valid_identifier(const std::string& word) {
    if (word.empty()) return false;
    for (char c : word) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    }
    return true;
}

std::size_t lookup(const std::vector<std::string>& types, const std::string& name,
                   std::size_t line) {
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (types[i] == name) return i;
    }
    throw ParseError("unknown type '" + name + "'", line);
}

}  // namespace

BranchingProcess parse_process(std::istream& in) {
    std::vector<std::string> types;
    std::vector<Rule> rules;
    std::vector<std::vector<std::string>> labels;
    std::vector<std::optional<unsigned>> colours;
    bool saw_types = false, saw_label = false, saw_colour = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> words = split_words(raw);
        if (words.empty()) continue;

        if (words[0] == "types:") {
            if (saw_types) throw ParseError("duplicate 'types:' line", line_no);
            saw_types = true;
            for (std::size_t i = 1; i < words.size(); ++i) {
                if (!valid_identifier(words[i])) throw ParseError("bad type name '" + words[i] + "'", line_no);
                for (const auto& existing : types) {
                    if (existing == words[i]) throw ParseError("duplicate type '" + words[i] + "'", line_no);
                }
                types.push_back(words[i]);
            }
            if (types.empty()) throw ParseError("'types:' line declares no types", line_no);
            labels.assign(types.size(), {});
            colours.assign(types.size(), std::nullopt);
        } else if (words[0] == "rule") {
            if (!saw_types) throw ParseError("'rule' before 'types:'", line_no);
            // rule <type> -> <prob> : <succ...>
            if (words.size() < 6 || words[2] != "->" || words[4] != ":") {
                throw ParseError("expected 'rule X -> p : Y1 Y2 ...'", line_no);
            }
            Rule rule;
            rule.source = lookup(types, words[1], line_no);
            auto probability = parse_rational(words[3]);
            if (!probability) throw ParseError("bad probability '" + words[3] + "'", line_no);
            rule.probability = *probability;
            for (std::size_t i = 5; i < words.size(); ++i) {
                rule.successors.push_back(lookup(types, words[i], line_no));
            }
            rules.push_back(std::move(rule));
        } else if (words[0] == "label") {
            if (!saw_types) throw ParseError("'label' before 'types:'", line_no);
            if (words.size() < 3 || words[2] != ":") throw ParseError("expected 'label X : a b ...'", line_no);
            std::size_t type = lookup(types, words[1], line_no);
            for (std::size_t i = 3; i < words.size(); ++i) {
                if (!valid_identifier(words[i])) throw ParseError("bad proposition '" + words[i] + "'", line_no);
                labels[type].push_back(words[i]);
            }
            saw_label = true;
        } else if (words[0] == "colour") {
            if (!saw_types) throw ParseError("'colour' before 'types:'", line_no);
            if (words.size() != 4 || words[2] != ":") throw ParseError("expected 'colour X : n'", line_no);
            std::size_t type = lookup(types, words[1], line_no);
            auto value = parse_rational(words[3]);
            if (!value || denominator(*value) != 1 || *value < 0) {
                throw ParseError("colour must be a nonnegative integer", line_no);
            }
            colours[type] = numerator(*value).convert_to<unsigned>();
            saw_colour = true;
        } else {
            throw ParseError("unrecognised directive '" + words[0] + "'", line_no);
        }
    }
    if (!saw_types) throw ParseError("missing 'types:' line", line_no == 0 ? 1 : line_no);

    BranchingProcess bp(std::move(types), std::move(rules));
    if (saw_label) bp.set_labels(std::move(labels));
    if (saw_colour) bp.set_colours(std::move(colours));
    validate(bp);
    return bp;
}

BranchingProcess parse_process_text(const std::string& text) {
    std::istringstream stream(text);
    return parse_process(stream);
}

BranchingProcess parse_process_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw Error("cannot open process file '" + path + "'");
    return parse_process(stream);
}

}  // namespace bpmc
