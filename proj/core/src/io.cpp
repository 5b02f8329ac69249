#include "poprank/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace poprank {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw InvalidInputError("line " + std::to_string(line) + ": " + what);
}

bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;  // blank
}

}  // namespace

VotingInstance parse_instance(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<Ranking> voters;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n >> m)) fail(line_no, "expected header \"n m\"");
            std::string trailing;
            if (fields >> trailing) fail(line_no, "unexpected token after header");
            if (n < 1) fail(line_no, "voter count must be at least 1");
            if (m < 1) fail(line_no, "candidate count must be at least 1");
            continue;
        }
        if (static_cast<int>(voters.size()) == n) {
            fail(line_no, "more than the declared " + std::to_string(n) + " voter rows");
        }
        std::vector<int> order;
        int c;
        while (fields >> c) order.push_back(c);
        if (!fields.eof()) fail(line_no, "non-integer token in voter row");
        if (static_cast<int>(order.size()) != m) {
            fail(line_no, "expected " + std::to_string(m) + " candidates, got " +
                              std::to_string(order.size()));
        }
        try {
            voters.emplace_back(std::move(order));
        } catch (const InvalidInputError& e) {
            fail(line_no, e.what());
        }
    }
    if (n < 0) throw InvalidInputError("empty instance file");
    if (static_cast<int>(voters.size()) != n) {
        throw InvalidInputError("declared " + std::to_string(n) + " voters but found " +
                                std::to_string(voters.size()) + " rows");
    }
    return VotingInstance(m, std::move(voters));
}

VotingInstance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

VotingInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string serialize_instance(const VotingInstance& inst) {
    std::ostringstream out;
    out << inst.n() << ' ' << inst.m << '\n';
    for (const Ranking& voter : inst.voters) {
        for (int p = 1; p <= inst.m; ++p) {
            if (p > 1) out << ' ';
            out << voter.at(p);
        }
        out << '\n';
    }
    return out.str();
}

void save_instance(const VotingInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write instance file: " + path);
    out << serialize_instance(inst);
}

Ranking parse_ranking_arg(const std::string& text) {
    std::string cleaned;
    for (char ch : text) {
        if (ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch))) {
            continue;  // brackets are cosmetic
        }
        cleaned.push_back(ch == ',' ? ' ' : ch);
    }
    std::istringstream fields(cleaned);
    std::vector<int> order;
    int c;
    while (fields >> c) order.push_back(c);
    if (!fields.eof() || order.empty()) {
        throw InvalidInputError("cannot parse ranking argument: " + text);
    }
    return Ranking(std::move(order));
}

}  // namespace poprank
