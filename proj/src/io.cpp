#include "grasscf/io.hpp"

#include "grasscf/errors.hpp"

#include <random>
#include <sstream>
#include <utility>

namespace grasscf {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string token;
    while (in >> token)
        tokens.push_back(token);
    return tokens;
}

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '#')
            in_comment = true;
        if (ch == '\n')
            in_comment = false;
        out.push_back(in_comment ? ' ' : ch);
    }
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
}

int get_dimension(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ValidationError(std::string("JSON field '") + key + "' must be an integer");
    return j[key].get<int>();
}

std::string get_string(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw ValidationError(std::string("JSON field '") + key + "' must be a string");
    return j[key].get<std::string>();
}

} // namespace

PluckerVector plucker_from_text(const std::string& text) {
    std::vector<std::string> tokens = tokenize(strip_comments(text));
    if (tokens.size() < 4 || tokens[2] != ":")
        throw ValidationError("expected `k n : entries...`");
    long k = 0, n = 0;
    try {
        k = std::stol(tokens[0]);
        n = std::stol(tokens[1]);
    } catch (const std::exception&) {
        throw ValidationError("invalid k or n in Pluecker vector text");
    }
    std::vector<Int> entries;
    entries.reserve(tokens.size() - 3);
    for (std::size_t i = 3; i < tokens.size(); ++i)
        entries.push_back(parse_int(tokens[i]));
    return PluckerVector(static_cast<int>(k), static_cast<int>(n), std::move(entries));
}

LatticeMatrix matrix_from_text(const std::string& text) {
    std::istringstream in(strip_comments(text));
    std::vector<std::vector<Int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty())
            continue;
        std::vector<Int> row;
        row.reserve(tokens.size());
        for (const std::string& t : tokens)
            row.push_back(parse_int(t));
        if (!rows.empty() && rows.front().size() != row.size())
            throw ValidationError("matrix rows have inconsistent lengths");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ValidationError("matrix text contains no rows");
    LatticeMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = std::move(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    return m;
}

std::string matrix_to_text(const LatticeMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0)
                out += ' ';
            out += to_decimal(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

Json plucker_to_json(const PluckerVector& p) {
    Json j;
    j["k"] = p.k();
    j["n"] = p.n();
    Json entries = Json::array();
    for (const Int& e : p.entries())
        entries.push_back(to_decimal(e));
    j["entries"] = std::move(entries);
    return j;
}

PluckerVector plucker_from_json(const Json& j) {
    int k = get_dimension(j, "k");
    int n = get_dimension(j, "n");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw ValidationError("JSON field 'entries' must be an array of decimal strings");
    std::vector<Int> entries;
    entries.reserve(j["entries"].size());
    for (const auto& e : j["entries"]) {
        if (!e.is_string())
            throw ValidationError("Pluecker entries must be decimal strings");
        entries.push_back(parse_int(e.get<std::string>()));
    }
    return PluckerVector(k, n, std::move(entries));
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(to_decimal(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ValidationError("matrix JSON must be a non-empty array of rows");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty())
        throw ValidationError("matrix JSON rows must be non-empty arrays");
    int cols = static_cast<int>(j[0].size());
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[static_cast<std::size_t>(r)].is_array() ||
            static_cast<int>(j[static_cast<std::size_t>(r)].size()) != cols)
            throw ValidationError("matrix JSON rows have inconsistent lengths");
        for (int c = 0; c < cols; ++c) {
            const auto& cell = j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (!cell.is_string())
                throw ValidationError("matrix entries must be decimal strings");
            m.at(r, c) = parse_int(cell.get<std::string>());
        }
    }
    return m;
}

Json trace_to_json(const Trace& t) {
    Json j;
    j["k"] = t.k;
    j["n"] = t.n_initial;
    Json steps = Json::array();
    for (const TraceStep& step : t.steps) {
        Json s;
        s["label"] = to_string(step.label);
        s["n"] = step.ambient_n;
        s["matrix"] = matrix_to_json(step.transform.matrix());
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    if (t.terminal_p_hat)
        j["p_hat"] = to_decimal(*t.terminal_p_hat);
    return j;
}

Trace trace_from_json(const Json& j) {
    Trace t;
    t.k = get_dimension(j, "k");
    t.n_initial = get_dimension(j, "n");
    if (!j.contains("steps") || !j["steps"].is_array())
        throw ValidationError("trace JSON field 'steps' must be an array");
    for (const auto& s : j["steps"]) {
        StageLabel label = stage_label_from_string(get_string(s, "label"));
        int ambient = get_dimension(s, "n");
        if (!s.contains("matrix"))
            throw ValidationError("trace step is missing its matrix");
        IntMatrix m = matrix_from_json(s["matrix"]);
        // unimodularity is a verification concern, not a parse error
        t.steps.push_back(TraceStep{transform_from_matrix_unchecked(std::move(m)), label, ambient});
    }
    if (j.contains("p_hat"))
        t.terminal_p_hat = parse_int(get_string(j, "p_hat"));
    validate_trace_shape(t);
    return t;
}

Json result_to_json(const ReconstructionResult& r) {
    Json j;
    j["matrix"] = matrix_to_json(r.matrix);
    j["p_hat"] = to_decimal(r.p_hat);
    j["index"] = to_decimal(r.sublattice_index);
    return j;
}

PluckerVector plucker_from_any(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
            continue;
        if (ch == '{')
            return plucker_from_json(parse_json(text));
        break;
    }
    return plucker_from_text(text);
}

LatticeMatrix matrix_from_any(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
            continue;
        if (ch == '{' || ch == '[')
            return matrix_from_json(parse_json(text));
        break;
    }
    return matrix_from_text(text);
}

LatticeMatrix random_full_rank_matrix(int k, int n, std::uint64_t bound, std::uint64_t seed,
                                      int max_tries) {
    if (k < 1 || k > n)
        throw ValidationError("random matrix requires 1 <= k <= n");
    if (bound < 1)
        throw ValidationError("random matrix requires bound >= 1");
    std::mt19937_64 gen(seed);
    // Rejection-sampled uniform on [0, span); implementation-defined
    // distributions are avoided so identical seeds give identical bytes.
    const std::uint64_t span = 2 * bound + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    auto draw = [&]() {
        std::uint64_t v;
        do {
            v = gen();
        } while (v >= limit);
        std::int64_t centered = static_cast<std::int64_t>(v % span) - static_cast<std::int64_t>(bound);
        return Int(static_cast<long>(centered));
    };
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        LatticeMatrix m(k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c)
                m.at(r, c) = draw();
        try {
            compute_plucker(m);
            return m;
        } catch (const ValidationError&) {
            // rank deficient; redraw
        }
    }
    throw InternalError("failed to draw a full-rank matrix after " + std::to_string(max_tries) +
                        " attempts");
}

} // namespace grasscf
