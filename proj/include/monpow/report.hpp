#pragma once

#include "monpow/assoc.hpp"
#include "monpow/bounds.hpp"
#include "monpow/ideal.hpp"
#include "monpow/integer.hpp"
#include "monpow/linsys.hpp"
#include "monpow/parse.hpp"
#include "monpow/powers.hpp"
#include "monpow/verify.hpp"

#include <json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

// Every command renders from one data struct into both a text and a JSON
// form, so the two always carry the same numeric content. JSON numbers are
// decimal strings throughout: the exact values exceed every native range.

namespace monpow {

namespace detail {

inline nlohmann::json json_support(const PrimeSupport& M) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : M.members()) {
        arr.push_back(std::to_string(v));
    }
    return arr;
}

inline nlohmann::json json_ass_set(const AssSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const PrimeSupport& p : s.primes()) {
        arr.push_back(json_support(p));
    }
    return arr;
}

inline nlohmann::json json_bound(const BoundValue& b) {
    return nlohmann::json{{"label", b.label},
                          {"squared", b.squared.str()},
                          {"ceiling", b.ceiling.str()}};
}

inline std::string rational_str(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string ass_set_text(const AssSet& s, const std::vector<std::string>& names) {
    if (s.empty()) {
        return "none";
    }
    std::string out;
    for (std::size_t i = 0; i < s.primes().size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += format_support(s.primes()[i], names);
    }
    return out;
}

inline std::string header_text(const std::vector<std::string>& names) {
    std::string out = "# variables:";
    for (const std::string& n : names) {
        out += " " + n;
    }
    return out + "\n";
}

} // namespace detail

struct AssReport {
    std::vector<std::string> var_names;
    unsigned power = 1;
    AssSet primes;
};

inline AssReport make_ass_report(const MonomialIdeal& I, std::vector<std::string> names,
                                 unsigned n) {
    if (n < 1) {
        throw DomainError("--power must be >= 1");
    }
    AssReport r;
    r.var_names = std::move(names);
    r.power = n;
    r.primes = ass(n == 1 ? I : power(I, n));
    return r;
}

inline std::string to_text(const AssReport& r) {
    std::ostringstream os;
    os << detail::header_text(r.var_names);
    os << "ass(I";
    if (r.power != 1) {
        os << "^" << r.power;
    }
    os << "): " << detail::ass_set_text(r.primes, r.var_names) << "\n";
    return os.str();
}

inline nlohmann::json to_json(const AssReport& r) {
    return nlohmann::json{{"command", "ass"},
                          {"variables", r.var_names},
                          {"power", std::to_string(r.power)},
                          {"ass", detail::json_ass_set(r.primes)}};
}

struct SequenceReport {
    std::vector<std::string> var_names;
    AssProfile profile;
    IndexReport index;
};

inline SequenceReport make_sequence_report(const MonomialIdeal& I,
                                           std::vector<std::string> names, unsigned n_max) {
    SequenceReport r;
    r.var_names = std::move(names);
    r.profile = ass_sequence(I, n_max);
    r.index = indices(r.profile);
    return r;
}

inline std::string to_text(const SequenceReport& r) {
    std::ostringstream os;
    os << detail::header_text(r.var_names);
    for (unsigned n = 1; n <= r.profile.n_max; ++n) {
        os << "n=" << n << ": " << detail::ass_set_text(r.profile.at_power(n), r.var_names)
           << "\n";
    }
    auto line = [&os](const char* name, const std::optional<unsigned>& v, bool confirmed) {
        os << name << ": ";
        if (v) {
            os << *v << (confirmed ? " (confirmed)" : " (unconfirmed)");
        } else {
            os << "-";
        }
        os << "\n";
    };
    line("stability", r.index.stability, r.index.stability_confirmed);
    line("persistence", r.index.persistence, r.index.persistence_confirmed);
    line("copersistence", r.index.copersistence, r.index.copersistence_confirmed);
    for (const auto& [prime, value] : r.index.per_prime_copersistence) {
        os << "copersistence" << format_support(prime, r.var_names) << ": " << value << "\n";
    }
    return os.str();
}

inline nlohmann::json to_json(const SequenceReport& r) {
    nlohmann::json seq = nlohmann::json::array();
    for (unsigned n = 1; n <= r.profile.n_max; ++n) {
        seq.push_back(nlohmann::json{{"n", std::to_string(n)},
                                     {"ass", detail::json_ass_set(r.profile.at_power(n))}});
    }
    auto idx = [](const std::optional<unsigned>& v, bool confirmed) {
        nlohmann::json j;
        j["value"] = v ? std::to_string(*v) : "";
        j["confirmed"] = confirmed;
        return j;
    };
    nlohmann::json per_prime = nlohmann::json::array();
    for (const auto& [prime, value] : r.index.per_prime_copersistence) {
        per_prime.push_back(nlohmann::json{{"prime", detail::json_support(prime)},
                                           {"value", std::to_string(value)}});
    }
    return nlohmann::json{
        {"command", "sequence"},
        {"variables", r.var_names},
        {"sequence", seq},
        {"stability", idx(r.index.stability, r.index.stability_confirmed)},
        {"persistence", idx(r.index.persistence, r.index.persistence_confirmed)},
        {"copersistence", idx(r.index.copersistence, r.index.copersistence_confirmed)},
        {"per_prime_copersistence", per_prime}};
}

struct BoundsReportOut {
    std::vector<std::string> var_names;
    BoundReport report;
};

inline std::string to_text(const BoundsReportOut& r) {
    const IdealStats& st = r.report.stats;
    std::ostringstream os;
    os << detail::header_text(r.var_names);
    os << "r=" << st.var_count << " s=" << st.gen_count << " d=" << st.max_degree
       << " d_red=" << st.reduced_max_degree << " support="
       << format_support(st.support, r.var_names) << "\n";
    auto line = [&os](const char* tag, const BoundValue& b) {
        os << tag << " " << b.label << ": ceiling=" << b.ceiling << " squared=" << b.squared
           << "\n";
    };
    line("reduced", r.report.sigma1_reduced);
    line("reduced", r.report.sigma2_reduced);
    line("raw", r.report.sigma1_raw);
    line("raw", r.report.sigma2_raw);
    os << "squared ratio sigma1/sigma2 (reduced): "
       << detail::rational_str(r.report.squared_ratio_reduced) << "\n";
    if (r.report.principal_trivial) {
        os << "note: single-generator ideal in >= 2 variables, copersistence index is 1\n";
    }
    if (r.report.reduced_degree_clamped) {
        os << "note: reduced degree was 0, bounds evaluated at degree 1\n";
    }
    return os.str();
}

inline nlohmann::json to_json(const BoundsReportOut& r) {
    const IdealStats& st = r.report.stats;
    return nlohmann::json{
        {"command", "bounds"},
        {"variables", r.var_names},
        {"stats",
         {{"r", std::to_string(st.var_count)},
          {"s", std::to_string(st.gen_count)},
          {"d", st.max_degree.str()},
          {"d_red", st.reduced_max_degree.str()},
          {"support", detail::json_support(st.support)}}},
        {"sigma1_reduced", detail::json_bound(r.report.sigma1_reduced)},
        {"sigma2_reduced", detail::json_bound(r.report.sigma2_reduced)},
        {"sigma1_raw", detail::json_bound(r.report.sigma1_raw)},
        {"sigma2_raw", detail::json_bound(r.report.sigma2_raw)},
        {"squared_ratio_reduced", detail::rational_str(r.report.squared_ratio_reduced)},
        {"principal_trivial", r.report.principal_trivial},
        {"reduced_degree_clamped", r.report.reduced_degree_clamped}};
}

struct DeltaReport {
    DeltaResult delta;
    BoundValue hadamard;
    std::size_t cols = 0; // nu
};

inline DeltaReport make_delta_report(const IneqSystem& sys, std::size_t order_cap) {
    return DeltaReport{delta_exact(sys, order_cap), hadamard_bound(sys), sys.cols};
}

inline std::string to_text(const DeltaReport& r) {
    std::ostringstream os;
    if (r.delta.complete) {
        os << "delta: " << r.delta.value << " (exact";
        if (r.delta.zero_matrix) {
            os << ", zero matrix";
        }
        os << ")\n";
    } else {
        os << "delta: >= " << r.delta.value << " (enumeration capped, use hadamard)\n";
    }
    os << "hadamard ceiling: " << r.hadamard.ceiling << " squared: " << r.hadamard.squared
       << "\n";
    os << "minors evaluated: " << r.delta.minors_evaluated << "\n";
    return os.str();
}

inline nlohmann::json to_json(const DeltaReport& r) {
    return nlohmann::json{{"command", "delta"},
                          {"delta", r.delta.value.str()},
                          {"exact", r.delta.complete},
                          {"zero_matrix", r.delta.zero_matrix},
                          {"minors_evaluated", std::to_string(r.delta.minors_evaluated)},
                          {"hadamard", detail::json_bound(r.hadamard)}};
}

struct VerifyReport {
    std::vector<std::string> var_names;
    SuiteResult characterization;
    SuiteResult system_oracle;
};

inline std::string to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << detail::header_text(r.var_names);
    os << "characterization checks: " << r.characterization.checks
       << (r.characterization.ok() ? " ok" : " MISMATCH") << "\n";
    os << "system-oracle checks: " << r.system_oracle.checks
       << (r.system_oracle.ok() ? " ok" : " MISMATCH") << "\n";
    for (const std::string& m : r.characterization.mismatches) {
        os << "  " << m << "\n";
    }
    for (const std::string& m : r.system_oracle.mismatches) {
        os << "  " << m << "\n";
    }
    return os.str();
}

inline nlohmann::json to_json(const VerifyReport& r) {
    return nlohmann::json{
        {"command", "verify"},
        {"variables", r.var_names},
        {"characterization",
         {{"checks", std::to_string(r.characterization.checks)},
          {"mismatches", r.characterization.mismatches}}},
        {"system_oracle",
         {{"checks", std::to_string(r.system_oracle.checks)},
          {"mismatches", r.system_oracle.mismatches}}}};
}

} // namespace monpow
