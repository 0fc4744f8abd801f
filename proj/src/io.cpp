#include "filippov/io.hpp"

#include "filippov/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace filippov {

namespace {

Json tuple_json(const IndexTuple& t) {
    Json a = Json::array();
    for (int i : t)
        a.push_back(i);
    return a;
}

Json vector_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(x.to_string());
    return a;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw Error(ErrorKind::ParseError, std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer())
        throw Error(ErrorKind::ParseError, std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

Rational rational_of(const Json& v) {
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    throw Error(ErrorKind::ParseError, "rational values must be strings like \"p/q\"");
}

IndexTuple tuple_of(const Json& v) {
    if (!v.is_array())
        throw Error(ErrorKind::ParseError, "expected an array of indices");
    IndexTuple t;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw Error(ErrorKind::ParseError, "indices must be integers");
        t.push_back(x.get<int>());
    }
    return t;
}

Vector vector_of(const Json& v) {
    if (!v.is_array())
        throw Error(ErrorKind::ParseError, "expected an array of rationals");
    Vector out;
    for (const auto& x : v)
        out.push_back(rational_of(x));
    return out;
}

Json tensor_json(const AntisymTensor& f) {
    Json j;
    j["arity"] = f.arity();
    j["dim"] = f.dim();
    Json entries = Json::array();
    for (const auto& e : f.entries()) {
        Json x;
        x["lower"] = tuple_json(e.lower);
        x["upper"] = e.upper;
        x["value"] = e.value.to_string();
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    return j;
}

} // namespace

Json to_json(const NLieAlgebra& alg) { return tensor_json(alg.tensor()); }

Json to_json(const LieAlgebra& lie) { return tensor_json(lie.tensor()); }

Json to_json(const InducedLie& il) {
    Json j = to_json(il.lie);
    j["source_arity"] = il.source_arity;
    j["source_dim"] = il.source_dim;
    Json words = Json::array();
    for (const auto& w : il.basis_words)
        words.push_back(tuple_json(w));
    j["basis_words"] = std::move(words);
    j["kernel"] = to_json(il.kernel);
    return j;
}

Json to_json(const Splitting& s) {
    Json j;
    j["i0"] = tuple_json(s.i0);
    j["i1"] = tuple_json(s.i1);
    return j;
}

Json to_json(const Grading& g) {
    Json j;
    Json w = Json::array();
    for (int x : g.weights)
        w.push_back(x);
    j["weights"] = std::move(w);
    return j;
}

Json to_json(const StructureReport& r) {
    Json j;
    j["subject"] = r.subject;
    Json claims = Json::array();
    for (const auto& c : r.claims) {
        Json x;
        x["name"] = c.name;
        x["verdict"] = c.verdict;
        x["witness"] = c.witness;
        claims.push_back(std::move(x));
    }
    j["claims"] = std::move(claims);
    j["verdict"] = r.verdict;
    return j;
}

Json to_json(const Subspace& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim();
    Json basis = Json::array();
    for (const auto& v : s.basis())
        basis.push_back(vector_json(v));
    j["basis"] = std::move(basis);
    return j;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        rows.push_back(vector_json(Vector(row.begin(), row.end())));
    }
    Json j;
    j["rows"] = std::move(rows);
    return j;
}

NLieAlgebra nlie_from_json(const Json& j) {
    const int arity = int_field(j, "arity");
    const int dim = int_field(j, "dim");
    const Json& entries = field(j, "entries");
    if (!entries.is_array())
        throw Error(ErrorKind::ParseError, "\"entries\" must be an array");
    std::vector<Entry> list;
    for (const auto& e : entries)
        list.push_back({tuple_of(field(e, "lower")), int_field(e, "upper"), rational_of(field(e, "value"))});
    return NLieAlgebra::new_unchecked(arity, dim, list);
}

LieAlgebra lie_from_json(const Json& j) {
    auto alg = nlie_from_json(j);
    if (alg.arity() != 2)
        throw Error(ErrorKind::ArityMismatch, "expected a Lie algebra (arity 2), got arity " +
                                                  std::to_string(alg.arity()));
    return LieAlgebra::from_tensor(alg.tensor());
}

InducedLie induced_from_json(const Json& j) {
    InducedLie il;
    il.lie = lie_from_json(j);
    il.source_arity = int_field(j, "source_arity");
    il.source_dim = int_field(j, "source_dim");
    const Json& words = field(j, "basis_words");
    if (!words.is_array())
        throw Error(ErrorKind::ParseError, "\"basis_words\" must be an array");
    for (const auto& w : words)
        il.basis_words.push_back(tuple_of(w));
    if (static_cast<int>(il.basis_words.size()) != il.lie.dim())
        throw Error(ErrorKind::DimensionMismatch, "basis_words does not match dim");
    if (j.contains("kernel"))
        il.kernel = subspace_from_json(j.at("kernel"));
    return il;
}

Splitting splitting_from_json(const Json& j) {
    IndexTuple i0 = tuple_of(field(j, "i0"));
    IndexTuple i1 = tuple_of(field(j, "i1"));
    const int dim = static_cast<int>(i0.size() + i1.size());
    return Splitting::from_parts(dim, std::move(i0), std::move(i1));
}

Grading grading_from_json(const Json& j) {
    Grading g;
    for (const auto& w : field(j, "weights")) {
        if (!w.is_number_integer() || w.get<int>() < 0)
            throw Error(ErrorKind::ParseError, "weights must be nonnegative integers");
        g.weights.push_back(w.get<int>());
    }
    return g;
}

StructureReport report_from_json(const Json& j) {
    StructureReport r;
    r.subject = field(j, "subject").get<std::string>();
    for (const auto& c : field(j, "claims"))
        r.claims.push_back({field(c, "name").get<std::string>(), field(c, "verdict").get<bool>(),
                            field(c, "witness").get<std::string>()});
    r.verdict = field(j, "verdict").get<std::string>();
    return r;
}

Subspace subspace_from_json(const Json& j) {
    const int ambient = int_field(j, "ambient_dim");
    std::vector<Vector> vs;
    for (const auto& v : field(j, "basis")) {
        vs.push_back(vector_of(v));
        if (static_cast<int>(vs.back().size()) != ambient)
            throw Error(ErrorKind::DimensionMismatch, "subspace vector has the wrong length");
    }
    return Subspace::span(vs, static_cast<std::size_t>(ambient));
}

Matrix matrix_from_json(const Json& j) {
    std::vector<Vector> rows;
    for (const auto& r : field(j, "rows"))
        rows.push_back(vector_of(r));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw Error(ErrorKind::ParseError, "matrix rows have different lengths");
    return Matrix::from_rows(rows, cols);
}

namespace {

bool is_flat(const Json& j) {
    return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
}

void write_pretty(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out += pad + Json(it.key()).dump() + ": ";
            write_pretty(it.value(), indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            write_pretty(j[i], indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else {
        // scalars and arrays of scalars stay on one line
        std::string flat;
        if (j.is_array()) {
            for (std::size_t i = 0; i < j.size(); ++i)
                flat += (i ? ", " : "") + j[i].dump();
            flat = "[" + flat + "]";
        } else {
            flat = j.is_object() ? "{}" : j.dump();
        }
        out += flat;
    }
}

} // namespace

std::string dump(const Json& j) {
    std::string out;
    write_pretty(j, 0, out);
    return out + "\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << text;
}

} // namespace filippov
