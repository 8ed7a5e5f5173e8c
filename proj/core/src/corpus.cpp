#include "grouplen/corpus.hpp"

#include "grouplen/errors.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grouplen {

namespace {

struct Line {
    unsigned number = 0;
    std::string keyword;
    std::string rest;
};

// Splits raw text into (keyword, rest) lines, dropping comments and blanks.
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    unsigned number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::size_t begin = 0;
        while (begin < raw.size() && std::isspace(static_cast<unsigned char>(raw[begin]))) {
            ++begin;
        }
        std::size_t end = raw.size();
        while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
        if (begin == end) continue;
        std::string body = raw.substr(begin, end - begin);
        const auto space = body.find_first_of(" \t");
        Line line;
        line.number = number;
        if (space == std::string::npos) {
            line.keyword = body;
        } else {
            line.keyword = body.substr(0, space);
            std::size_t vstart = space;
            while (vstart < body.size() &&
                   std::isspace(static_cast<unsigned char>(body[vstart]))) {
                ++vstart;
            }
            line.rest = body.substr(vstart);
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

unsigned parse_unsigned(const std::string& text, unsigned line) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw parse_error("expected a positive integer, got '" + text + "'", line, 0);
    }
    if (pos != text.size() || value == 0) {
        throw parse_error("expected a positive integer, got '" + text + "'", line, 0);
    }
    return static_cast<unsigned>(value);
}

}  // namespace

std::vector<GroupSpec> parse_corpus(const std::string& text) {
    std::vector<GroupSpec> specs;
    std::set<std::string> names;

    const auto lines = tokenize(text);
    std::size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].keyword != "group") {
            throw parse_error("expected 'group <name>', got '" + lines[i].keyword + "'",
                              lines[i].number, 0);
        }
        if (lines[i].rest.empty()) {
            throw parse_error("group requires a name", lines[i].number, 0);
        }
        GroupSpec spec;
        spec.name = lines[i].rest;
        if (!names.insert(spec.name).second) {
            throw parse_error("duplicate group name '" + spec.name + "'", lines[i].number, 0);
        }
        ++i;

        if (i >= lines.size() || lines[i].keyword != "degree") {
            throw parse_error("expected 'degree <n>' after group header",
                              i < lines.size() ? lines[i].number : lines.back().number, 0);
        }
        spec.degree = parse_unsigned(lines[i].rest, lines[i].number);
        ++i;

        while (i < lines.size() && lines[i].keyword == "gen") {
            if (lines[i].rest.empty()) {
                throw parse_error("gen requires cycle notation", lines[i].number, 0);
            }
            spec.generator_text.push_back(lines[i].rest);
            ++i;
        }
        if (spec.generator_text.empty()) {
            throw parse_error("group '" + spec.name + "' has no generators",
                              i < lines.size() ? lines[i].number : lines.back().number, 0);
        }
        while (i < lines.size() && lines[i].keyword == "tag") {
            if (lines[i].rest.empty()) {
                throw parse_error("tag requires a word", lines[i].number, 0);
            }
            std::istringstream words(lines[i].rest);
            std::string word;
            while (words >> word) spec.tags.push_back(word);
            ++i;
        }
        if (i >= lines.size() || lines[i].keyword != "end") {
            throw parse_error("expected 'end' to close group '" + spec.name + "'",
                              i < lines.size() ? lines[i].number : lines.back().number, 0);
        }
        const unsigned end_line = lines[i].number;
        ++i;

        std::vector<Permutation> gens;
        for (const auto& gtext : spec.generator_text) {
            try {
                gens.push_back(parse_cycles(gtext, spec.degree));
            } catch (const parse_error&) {
                throw;
            } catch (const std::exception& e) {
                throw parse_error(std::string("bad generator for '") + spec.name +
                                      "': " + e.what(),
                                  end_line, 0);
            }
        }
        spec.group = PermutationGroup(spec.degree, gens);

        for (const auto& tag : spec.tags) {
            if (tag.rfind("order:", 0) == 0) {
                const unsigned long long claimed = std::stoull(tag.substr(6));
                if (spec.group.order() != claimed) {
                    throw parse_error("group '" + spec.name + "' claims order " +
                                          tag.substr(6) + " but has order " +
                                          std::to_string(spec.group.order()),
                                      end_line, 0);
                }
            }
        }
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::vector<GroupSpec> load_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str());
}

std::string render_group_spec(const std::string& name, const PermutationGroup& group,
                              const std::vector<std::string>& tags) {
    std::ostringstream out;
    out << "group " << name << "\n";
    out << "degree " << group.degree() << "\n";
    for (const auto& g : group.generators()) out << "gen " << to_cycles(g) << "\n";
    for (const auto& t : tags) out << "tag " << t << "\n";
    out << "end\n";
    return out.str();
}

}  // namespace grouplen
