#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qo/parser.hpp"
#include "qo/verify.hpp"

namespace qo {

inline const Rational kDefaultPrecision{12};

struct BranchInput {
    Branch branch;
    std::optional<SeriesYPoly> poly;  // exact factor, when the root is only a truncation
};

struct ProblemInput {
    std::vector<std::string> vars;
    Rational precision = kDefaultPrecision;
    long conductor = 0;  // 0: no hint
    ExtensionPtr ext;
    std::vector<BranchInput> branches;
    std::optional<SeriesYPoly> poly;

    std::size_t d() const { return vars.size(); }
    LiteralContext context() const;
};

// Line-oriented key=value input; statements end at ';' or a newline, '#' starts a comment.
//   vars=[x1,x2]  precision=12  conductor=8  poly="..."
//   ext{var="t", poly="t^2 - sqrt(2)"}
//   branch{label="f1", root="x1^(3/2)*x2", denom=2, poly="..."}
ProblemInput parse_input(std::string_view text, const Rational& default_precision = kDefaultPrecision);

// Built-in default, replaced by QO_PRECISION when set.
Rational default_precision();

// Branches, the polynomial f and both trees.
struct Problem {
    ProblemInput input;
    std::vector<Branch> branches;
    std::vector<SeriesYPoly> branch_polys;
    SeriesYPoly f;
    KuoLuTree tree;
    EggersTree eggers;
};

// Branches of a d = 1 polynomial come from Newton-Puiseux at the input precision.
Problem resolve(const ProblemInput& in);

// "f", "f(k)" for the normalized k-th derivative, a branch label, or a polynomial literal.
SeriesYPoly resolve_polynomial(const Problem& p, const std::string& spec);

enum class Format { text, dot, json };
Format parse_format(const std::string& s);

std::string render_tree(const Problem& p, Format fmt);
std::string render_polar(const Problem& p, long k, Format fmt);
std::string render_verify(const Problem& p, long k, const VerificationReport& rep, Format fmt);

struct PolarSummary {
    std::vector<EggersFactorPrediction> factors;
    RegularityReport regularity;
    std::optional<NewtonPolytope> resultant;  // absent when not Kuo-Lu k-regular
    std::optional<MerlePrediction> merle;     // single-branch inputs
    long degree_sum = 0;
};
PolarSummary summarize_polar(const Problem& p, long k);

// The oracle suite for one k: derivative data, resultant polygons, degree sum and, for d = 1,
// the higher Kuo-Lu clauses.
VerificationReport run_verification(const Problem& p, long k, std::size_t subs);

// JSON encodings; rationals are "p/q" strings, cyclotomic numbers carry their conductor.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Number& c);
nlohmann::json to_json(const Series& s);
nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const NewtonPolytope& p);
nlohmann::json to_json(const ScaledPolytope& p);
Rational rational_from_json(const nlohmann::json& j);
Number number_from_json(const nlohmann::json& j, const ExtensionPtr& ext = nullptr);
Series series_from_json(const nlohmann::json& j, const ExtensionPtr& ext = nullptr);
UniPoly unipoly_from_json(const nlohmann::json& j, const ExtensionPtr& ext = nullptr);

// Exit codes: 0 success, 1 error or mismatch, 2 hypothesis violated, 3 indeterminate.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qo
