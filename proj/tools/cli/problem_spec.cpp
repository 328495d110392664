#include "cli/problem_spec.hpp"

#include "maxtoric/error.hpp"
#include "maxtoric/toric/constraint_matrix.hpp"

#include <json.hpp>

#include <limits>

namespace maxtoric::cli {
namespace {

using Json = nlohmann::json;

// Keeps the literal text of every floating-point number (as a binary value,
// which JSON text itself can never produce) so decimals convert exactly.
class LiteralSax : public nlohmann::detail::json_sax_dom_parser<Json> {
public:
    using json_sax_dom_parser::json_sax_dom_parser;

    bool number_float(double, const std::string& literal) {
        Json::binary_t bytes(std::vector<std::uint8_t>(literal.begin(), literal.end()));
        return binary(bytes);
    }
};

Json parse_json(std::string_view text) {
    Json doc;
    LiteralSax sax(doc, false);
    if (!Json::sax_parse(text.begin(), text.end(), &sax) || doc.is_discarded())
        throw InputError("$: malformed JSON document");
    return doc;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw InputError(path + ": " + message);
}

Rational to_rational(const Json& v, const std::string& path) {
    try {
        if (v.is_number_unsigned()) return Rational(std::to_string(v.get<std::uint64_t>()));
        if (v.is_number_integer()) return Rational(std::to_string(v.get<std::int64_t>()));
        if (v.is_binary()) {
            const auto& raw = v.get_binary();
            return parse_rational(std::string(raw.begin(), raw.end()));
        }
        if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
    fail(path, "expected a number or an \"a/b\" string");
}

std::int64_t to_integer(const Json& v, const std::string& path) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned() &&
            v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            fail(path, "value out of range");
        return v.get<std::int64_t>();
    }
    if (v.is_binary() || v.is_string()) {
        const auto q = to_rational(v, path);
        if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
    }
    fail(path, "integer-valued constraint required");
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& require_array(const Json& obj, const char* key, const std::string& path) {
    const auto& v = require(obj, key, path);
    if (!v.is_array()) fail(path + "." + key, "expected an array");
    return v;
}

}  // namespace

toric::ConstraintMatrix ProblemSpec::matrix() const {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& c : constraints) rows.push_back(c.values);
    return toric::ConstraintMatrix::from_rows(rows);
}

maxent::MaxEntProblem ProblemSpec::problem() const {
    const std::vector<Rational> h = prior.value_or(std::vector<Rational>{});
    if (samples) return maxent::MaxEntProblem::with_samples(matrix(), *samples, h);
    maxent::MomentTargets t;
    for (const auto& c : constraints) t.push_back(*c.target);
    return maxent::MaxEntProblem::with_targets(matrix(), std::move(t), h);
}

ProblemSpec parse_problem(std::string_view text) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) fail("$", "expected an object");
    for (const auto& [key, _] : doc.items())
        if (key != "m" && key != "constraints" && key != "samples" && key != "prior")
            fail("$." + key, "unknown field");

    ProblemSpec spec;
    const auto& m = require(doc, "m", "$");
    if (!m.is_number_integer() || m.get<std::int64_t>() < 2) fail("$.m", "expected an integer >= 2");
    spec.m = m.get<std::size_t>();

    const auto& constraints = require_array(doc, "constraints", "$");
    if (constraints.empty()) fail("$.constraints", "at least one constraint required");
    std::size_t with_target = 0;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto path = "$.constraints[" + std::to_string(i) + "]";
        const auto& c = constraints[i];
        if (!c.is_object()) fail(path, "expected an object");
        ConstraintSpec cs;
        if (const auto it = c.find("name"); it != c.end()) {
            if (!it->is_string()) fail(path + ".name", "expected a string");
            cs.name = it->get<std::string>();
        } else {
            cs.name = "t" + std::to_string(i + 1);
        }
        const auto& values = require_array(c, "values", path);
        if (values.size() != spec.m)
            fail(path + ".values", "expected " + std::to_string(spec.m) + " entries, got " +
                                       std::to_string(values.size()));
        for (std::size_t j = 0; j < values.size(); ++j)
            cs.values.push_back(to_integer(values[j], path + ".values[" + std::to_string(j) + "]"));
        if (const auto it = c.find("target"); it != c.end()) {
            cs.target = to_rational(*it, path + ".target");
            ++with_target;
        }
        spec.constraints.push_back(std::move(cs));
    }

    if (const auto it = doc.find("samples"); it != doc.end()) {
        if (!it->is_array() || it->empty()) fail("$.samples", "expected a nonempty array");
        std::vector<std::size_t> obs;
        for (std::size_t l = 0; l < it->size(); ++l) {
            const auto& o = (*it)[l];
            const auto path = "$.samples[" + std::to_string(l) + "]";
            if (!o.is_number_integer() || o.get<std::int64_t>() < 1 ||
                o.get<std::uint64_t>() > spec.m)
                fail(path, "expected an observation in 1.." + std::to_string(spec.m));
            obs.push_back(o.get<std::size_t>());
        }
        spec.samples = std::move(obs);
    }
    if (spec.samples ? with_target != 0 : with_target != spec.constraints.size())
        fail("$", "give either a target for every constraint or a \"samples\" list, not both");

    if (const auto it = doc.find("prior"); it != doc.end()) {
        if (!it->is_array() || it->size() != spec.m)
            fail("$.prior", "expected an array of " + std::to_string(spec.m) + " weights");
        std::vector<Rational> h;
        for (std::size_t j = 0; j < it->size(); ++j) {
            const auto path = "$.prior[" + std::to_string(j) + "]";
            h.push_back(to_rational((*it)[j], path));
            if (h.back() <= 0) fail(path, "prior weights must be positive");
        }
        spec.prior = std::move(h);
    }
    return spec;
}

toric::DistributionVector parse_distribution(std::string_view text) {
    const Json doc = parse_json(text);
    const Json* arr = &doc;
    std::string path = "$";
    if (doc.is_object()) {
        arr = &require_array(doc, "p", "$");
        path = "$.p";
    }
    if (!arr->is_array() || arr->size() < 2) fail(path, "expected an array of probabilities");
    std::vector<Rational> exact;
    Rational sum;
    for (std::size_t j = 0; j < arr->size(); ++j) {
        exact.push_back(to_rational((*arr)[j], path + "[" + std::to_string(j) + "]"));
        if (exact.back() < 0) fail(path + "[" + std::to_string(j) + "]", "negative probability");
        sum += exact.back();
    }
    if (sum == 1) return toric::DistributionVector(std::move(exact));
    std::vector<double> p;
    for (const auto& q : exact) p.push_back(q.get_d());
    try {
        return toric::DistributionVector(std::move(p), 1e-9);
    } catch (const DomainError&) {
        fail(path, "probabilities must sum to 1");
    }
}

}  // namespace maxtoric::cli
