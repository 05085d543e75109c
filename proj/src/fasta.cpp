#include "casforest/fasta.hpp"

#include <cctype>
#include <istream>
#include <ostream>

namespace casforest {

namespace {

std::string header_id(const std::string& line, int record_no) {
    // id = first whitespace-delimited token after '>'
    std::size_t begin = 1;
    while (begin < line.size() && std::isspace(static_cast<unsigned char>(line[begin]))) {
        ++begin;
    }
    std::size_t end = begin;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) {
        ++end;
    }
    if (end == begin) {
        return "seq" + std::to_string(record_no);
    }
    return line.substr(begin, end - begin);
}

}  // namespace

std::vector<Sequence> parse_fasta(std::istream& in, const Alphabet& alphabet) {
    std::vector<Sequence> records;
    bool in_record = false;

    auto finish = [&] {
        if (in_record && records.back().symbols.empty()) {
            throw CasError("empty record \"" + records.back().id + "\" in FASTA input");
        }
    };

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line.front() == '>') {
            finish();
            in_record = true;
            records.push_back(Sequence{header_id(line, static_cast<int>(records.size()) + 1), ""});
            continue;
        }
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (blank) {
            continue;
        }
        if (!in_record) {
            throw CasError("FASTA input must start with a '>' header line");
        }
        Sequence& rec = records.back();
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                continue;
            }
            char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (!alphabet.contains(u)) {
                throw CasError("invalid symbol '" + std::string(1, c) + "' at offset " +
                               std::to_string(rec.symbols.size() + 1) + " in record \"" +
                               rec.id + "\"");
            }
            rec.symbols.push_back(u);
        }
    }
    finish();
    return records;
}

void write_fasta(std::ostream& out, const std::vector<Sequence>& seqs) {
    for (const Sequence& s : seqs) {
        out << '>' << s.id << '\n' << s.symbols << '\n';
    }
}

}  // namespace casforest
