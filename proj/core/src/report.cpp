#include "feq/report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace feq {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json validation_obj(const ValidationReport& vr) {
    ordered_json v;
    v["ok"] = vr.ok;
    v["violations"] = ordered_json::array();
    for (const Violation& x : vr.violations) {
        ordered_json item;
        item["kind"] = violation_kind_name(x.kind);
        item["indices"] = x.indices;
        v["violations"].push_back(item);
    }
    return v;
}

ordered_json flags_obj(const StructureFlags& f) {
    ordered_json j;
    j["beta_is_one_minus_alpha"] = f.beta_is_one_minus_alpha;
    j["alpha_all_one"] = f.alpha_all_one;
    j["symmetric_swap"] = f.symmetric_swap;
    j["coeff_sum_nonzero"] = f.coeff_sum_nonzero;
    return j;
}

// fixed-point decimal with exactly frac_digits digits after the point;
// round-half-away; always plain notation (parses as a hint decimal)
std::string plain_decimal(const Rational& q, int frac_digits) {
    const Int scale = int_pow(Int(10), static_cast<unsigned long>(frac_digits));
    Int num = q.numerator() * scale;
    const Int den = q.denominator();
    Int quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_abs(rem.get_mpz_t(), rem.get_mpz_t());
    if (2 * rem >= den) quot += q.sign();
    Int absq;
    mpz_abs(absq.get_mpz_t(), quot.get_mpz_t());
    const Int whole = absq / scale;
    const Int frac = absq % scale;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), static_cast<size_t>(frac_digits) - fs.size(), '0');
    std::string out;
    if (sgn(quot) < 0) out += "-";
    out += whole.get_str() + "." + fs;
    return out;
}

std::string root_decimal(const Ball& ball, int digits) {
    const std::string re = plain_decimal(ball.re().to_rational(), digits);
    const std::string im = plain_decimal(ball.im().to_rational(), digits);
    std::string out = re;
    out += (im[0] == '-') ? "" : "+";
    out += im + "i";
    return out;
}

} // namespace

std::string report_json(const EquationSpec& spec, const AnalysisReport& report,
                        const SolutionBasis& basis) {
    ordered_json j;
    j["n"] = spec.n;
    j["field"] = {{"min_poly", spec.field->min_poly().str()},
                  {"degree", spec.field->degree()},
                  {"distinguished_root", spec.field->distinguished_index()}};
    j["validation"] = validation_obj(report.validation);
    j["flags"] = flags_obj(report.flags);
    j["degrees"] = ordered_json::array();
    for (const DegreeReport& d : report.degrees) {
        ordered_json dj;
        dj["p"] = d.p;
        dj["T"] = ordered_json::array();
        for (const FieldElement& t : d.T) dj["T"].push_back(t.str());
        dj["identity_admissible"] = d.identity_admissible;
        dj["c_tilde"] = d.c_tilde ? ordered_json(d.c_tilde->str()) : ordered_json(nullptr);
        dj["kernel_witnesses"] = ordered_json::array();
        for (const EmbeddingTuple& w : d.kernel_witnesses) dj["kernel_witnesses"].push_back(w.indices);
        dj["classification"] = classification_name(d.classification);
        j["degrees"].push_back(dj);
    }
    j["basis"] = ordered_json();
    j["basis"]["constant"] = true;
    j["basis"]["monomials"] = ordered_json::array();
    for (const SolutionTerm& t : basis.terms)
        j["basis"]["monomials"].push_back({{"p", t.p}, {"F_coeff", t.F_coeff.str()}});
    return j.dump(2) + "\n";
}

std::string report_text(const EquationSpec& spec, const AnalysisReport& report,
                        const SolutionBasis& basis) {
    std::ostringstream out;
    out << "equation: n = " << spec.n;
    if (spec.field->is_rational()) {
        out << " over Q\n";
    } else {
        out << " over Q(u), minimal polynomial " << spec.field->min_poly().str()
            << ", distinguished root #" << spec.field->distinguished_index() << " = "
            << root_decimal(spec.field->root_ball(spec.field->distinguished_index(), 64), 16)
            << "\n";
    }
    out << "validation: " << (report.validation.ok ? "ok" : "FAILED") << "\n";
    for (const Violation& v : report.validation.violations) {
        out << "  " << violation_kind_name(v.kind) << "(";
        for (size_t i = 0; i < v.indices.size(); ++i) out << (i ? "," : "") << v.indices[i];
        out << ")\n";
    }
    const StructureFlags& f = report.flags;
    out << "flags: beta_is_one_minus_alpha=" << (f.beta_is_one_minus_alpha ? "yes" : "no")
        << " alpha_all_one=" << (f.alpha_all_one ? "yes" : "no")
        << " symmetric_swap=" << (f.symmetric_swap ? "yes" : "no")
        << " coeff_sum_nonzero=" << (f.coeff_sum_nonzero ? "yes" : "no") << "\n";
    out << "degree bound: " << degree_bound(spec) << "\n";
    for (const DegreeReport& d : report.degrees) {
        out << "p = " << d.p << ": T = [";
        for (size_t i = 0; i < d.T.size(); ++i) out << (i ? ", " : "") << d.T[i].str();
        out << "]\n";
        out << "  admissible: " << (d.identity_admissible ? "yes" : "no");
        if (d.c_tilde) out << ", c~ = " << d.c_tilde->str();
        out << "\n  kernel: ";
        if (d.kernel_witnesses.empty()) {
            out << "(empty)";
        } else {
            for (size_t i = 0; i < d.kernel_witnesses.size(); ++i) {
                out << (i ? " " : "") << "(";
                const auto& idx = d.kernel_witnesses[i].indices;
                for (size_t k = 0; k < idx.size(); ++k) out << (k ? "," : "") << idx[k];
                out << ")";
            }
        }
        out << "\n  classification: " << classification_name(d.classification) << "\n";
    }
    out << "basis:\n";
    out << "  constant: f = k, F = (" << basis.constant_F_coeff.str() << ")*k*x + C\n";
    for (const SolutionTerm& t : basis.terms)
        out << "  p = " << t.p << ": f = g*x^" << t.p << ", F = g*(" << t.F_coeff.str() << ")*x^"
            << (t.p + 1) << "\n";
    for (const KernelAnnotation& k : basis.incomplete) {
        out << "  p = " << k.p << ": " << classification_name(k.classification)
            << " (homogeneous part not described; witnesses:";
        for (const EmbeddingTuple& w : k.witnesses) {
            out << " (";
            for (size_t i = 0; i < w.indices.size(); ++i) out << (i ? "," : "") << w.indices[i];
            out << ")";
        }
        out << ")\n";
    }
    return out.str();
}

std::string validation_json(const ValidationReport& vr) {
    ordered_json j;
    j["validation"] = validation_obj(vr);
    return j.dump(2) + "\n";
}

std::string validation_text(const ValidationReport& vr) {
    std::ostringstream out;
    out << "validation: " << (vr.ok ? "ok" : "FAILED") << "\n";
    for (const Violation& v : vr.violations) {
        out << "  " << violation_kind_name(v.kind) << "(";
        for (size_t i = 0; i < v.indices.size(); ++i) out << (i ? "," : "") << v.indices[i];
        out << ")\n";
    }
    return out.str();
}

std::string serialize_spec(const EquationSpec& spec, const std::vector<FieldElement>* f,
                           const std::vector<FieldElement>* F) {
    std::ostringstream out;
    if (!spec.field->is_rational()) {
        out << "field u: " << spec.field->min_poly().str() << "\n";
        if (spec.field->distinguished_index() != 0) {
            // enough digits to separate the distinguished root from every other
            const Rational sep = separation_bound(spec.field->min_poly());
            const double log10sep =
                (static_cast<double>(mpz_sizeinbase(sep.numerator().get_mpz_t(), 2)) -
                 static_cast<double>(mpz_sizeinbase(sep.denominator().get_mpz_t(), 2))) *
                0.30103;
            const int digits = std::max(24, static_cast<int>(-log10sep) + 8);
            const int bits = static_cast<int>(digits * 3.33) + 16;
            const Ball root = spec.field->root_ball(spec.field->distinguished_index(), bits);
            out << "root_hint = " << root_decimal(root, digits) << "\n";
        }
    }
    auto list = [&out](const char* key, const std::vector<FieldElement>& xs) {
        out << key << " = [";
        for (size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i].str();
        out << "]\n";
    };
    list("a", spec.a);
    list("alpha", spec.alpha);
    list("beta", spec.beta);
    if (f) list("f", *f);
    if (F) list("F", *F);
    return out.str();
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    std::string text;
    {
        std::ifstream in(config.input_path, std::ios::binary);
        if (!in) {
            err << "cannot read input file: " << config.input_path << "\n";
            return 66;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    ParsedInput parsed;
    try {
        parsed = parse_input(text);
    } catch (const ParseError& e) {
        err << config.input_path << ": " << e.what() << "\n";
        return 2;
    } catch (const Reducible& e) {
        err << config.input_path << ": field polynomial is reducible, factor " << e.witness.str()
            << "\n";
        return 2;
    } catch (const UnsupportedDegree& e) {
        err << config.input_path << ": " << e.what() << "\n";
        return 3;
    } catch (const AmbiguousHint& e) {
        err << config.input_path << ": " << e.what() << "\n";
        return 2;
    }
    const EquationSpec& spec = parsed.spec;
    const ValidationReport vr = validate(spec);

    switch (config.command) {
        case CliConfig::Command::Validate:
            out << (config.format == OutputFormat::Json ? validation_json(vr) : validation_text(vr));
            return vr.ok ? 0 : 1;

        case CliConfig::Command::Analyze: {
            if (!vr.ok) {
                out << (config.format == OutputFormat::Json ? validation_json(vr)
                                                            : validation_text(vr));
                return 1;
            }
            const PrecisionPolicy pp{config.precision_bits, config.max_precision_bits};
            try {
                reset_precision_high_water();
                const AnalysisReport report = analyze(spec, config.max_degree, pp);
                const SolutionBasis basis = build_basis(spec, report);
                out << (config.format == OutputFormat::Json ? report_json(spec, report, basis)
                                                            : report_text(spec, report, basis));
                err << "precision: start " << config.precision_bits << " bits, peak "
                    << std::max<long>(precision_high_water(), config.precision_bits)
                    << " bits\n";
                return 0;
            } catch (const PrecisionExhausted& e) {
                err << e.what() << "\n";
                return 3;
            }
        }

        case CliConfig::Command::Verify: {
            if (!parsed.f || !parsed.F) {
                err << config.input_path << ": verify needs both 'f = [...]' and 'F = [...]'\n";
                return 2;
            }
            const bool holds = verify_identity(spec, *parsed.f, *parsed.F);
            if (config.format == OutputFormat::Json) {
                ordered_json j;
                j["identity_holds"] = holds;
                out << j.dump(2) << "\n";
            } else {
                out << (holds ? "identity holds\n" : "identity does not hold\n");
            }
            return 0;
        }
    }
    return 70;
}

} // namespace feq
