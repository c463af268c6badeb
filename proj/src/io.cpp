// io.cpp

#include "eab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace eab {

using nlohmann::json;

InputError::InputError(const std::string& what, int line, int col)
    : std::runtime_error(what), line_(line), col_(col) {}

namespace {

// position of byte offset `byte` (1-based, as reported by the parser)
std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        std::ostringstream os;
        os << "line " << line << ", column " << col << ": malformed JSON";
        const std::string msg = e.what();
        if (auto p = msg.find(": "); p != std::string::npos) os << " (" << msg.substr(p + 2) << ")";
        throw InputError(os.str(), line, col);
    }
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InputError("at " + path + ": " + what, 0, 0);
}

const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const json& v, const std::string& path, int lo, int hi) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    const long long x = v.get<long long>();
    if (x < lo || x > hi) fail(path, "value " + std::to_string(x) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    return static_cast<int>(x);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) fail(path, "unknown field '" + it.key() + "'");
    }
}

}  // namespace

SymplecticMetricSpace parse_mu_table(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail("/", "expected an object with fields 'rank' and 'mu'");
    reject_unknown(doc, {"rank", "mu"}, "/");
    const int rank = as_int(field(doc, "rank", "/"), "/rank", 0, kMaxSmsRank);
    const json& mu = field(doc, "mu", "/");
    if (!mu.is_array()) fail("/mu", "expected an array");
    const std::size_t expect = std::size_t(1) << rank;
    if (mu.size() != expect)
        fail("/mu", "length " + std::to_string(mu.size()) + " but rank " + std::to_string(rank) + " needs " +
                        std::to_string(expect));
    std::vector<std::uint8_t> table(expect);
    for (std::size_t v = 0; v < expect; ++v)
        table[v] = static_cast<std::uint8_t>(as_int(mu[v], "/mu/" + std::to_string(v), 0, 1));
    return SymplecticMetricSpace(rank, std::move(table));
}

GeneratorInput parse_generators(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail("/", "expected an object with fields 'field_mode', 'n', 'generators'");
    reject_unknown(doc, {"field_mode", "n", "generators"}, "/");
    GeneratorInput in;
    const json& mode = field(doc, "field_mode", "/");
    if (!mode.is_string()) fail("/field_mode", "expected a string");
    try {
        in.mode = parse_field_mode(mode.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail("/field_mode", e.what());
    }
    in.n = as_int(field(doc, "n", "/"), "/n", 1, kMaxMatrixSize);
    const json& gens = field(doc, "generators", "/");
    if (!gens.is_array()) fail("/generators", "expected an array");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string path = "/generators/" + std::to_string(g);
        const json& item = gens[g];
        if (!item.is_object()) fail(path, "expected an object");
        reject_unknown(item, {"perm", "entries", "conj"}, path);
        const json& perm = field(item, "perm", path);
        const json& entries = field(item, "entries", path);
        if (!perm.is_array() || perm.size() != static_cast<std::size_t>(in.n))
            fail(path + "/perm", "expected an array of length n=" + std::to_string(in.n));
        if (!entries.is_array() || entries.size() != static_cast<std::size_t>(in.n))
            fail(path + "/entries", "expected an array of length n=" + std::to_string(in.n));
        std::vector<int> p(in.n);
        std::vector<Unit> e(in.n);
        for (int c = 0; c < in.n; ++c) {
            p[c] = as_int(perm[c], path + "/perm/" + std::to_string(c), 0, in.n - 1);
            const json& lab = entries[c];
            const std::string epath = path + "/entries/" + std::to_string(c);
            if (!lab.is_string()) fail(epath, "expected a unit label string");
            try {
                e[c] = Unit::parse(lab.get<std::string>());
            } catch (const std::invalid_argument& ex) {
                fail(epath, ex.what());
            }
        }
        bool conj = false;
        if (auto it = item.find("conj"); it != item.end()) {
            if (!it->is_boolean()) fail(path + "/conj", "expected true or false");
            conj = it->get<bool>();
        }
        try {
            in.generators.emplace_back(MonomialMatrix(in.mode, std::move(p), std::move(e)), conj);
        } catch (const std::invalid_argument& ex) {
            fail(path, ex.what());
        }
    }
    return in;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path, 0, 0);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace eab
