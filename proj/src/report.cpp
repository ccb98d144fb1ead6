#include "ezheeg/report.hpp"

#include <sstream>

namespace ezheeg {

std::string fg_report_text(const FGCrosscheck& fg) {
    std::ostringstream os;
    os << "trivial-zero crosscheck: p = " << fg.p << ", disc = " << fg.disc << "\n";
    os << "  L(0, chi)              = " << rat_to_string(fg.L0_exact) << " (exact)\n";
    os << "  L_p(0, chi omega)      = " << fg.Lp_at_zero.to_string() << "\n";
    os << "  L_p'(0, chi omega)     = " << fg.Lp_deriv.to_string() << "\n";
    os << "  ratio L_p'/L(0)        = " << fg.ratio.to_string() << "\n";
    os << "  character L-invariant  = " << fg.Lchi.to_string() << "\n";
    os << "  normalized ratio       = " << fg.normalized.to_string() << "\n";
    os << "  [" << (fg.pass ? "PASS" : "FAIL") << "] agreement to " << fg.agreement
       << " digits\n";
    return os.str();
}

std::string fg_report_json(const FGCrosscheck& fg) {
    std::ostringstream os;
    os << "{\"p\":" << fg.p << ",\"disc\":" << fg.disc << ",\"L0_exact\":\""
       << rat_to_string(fg.L0_exact) << "\",\"Lp_at_zero\":" << fg.Lp_at_zero.json()
       << ",\"Lp_deriv\":" << fg.Lp_deriv.json() << ",\"ratio\":" << fg.ratio.json()
       << ",\"L_chi\":" << fg.Lchi.json() << ",\"normalized\":" << fg.normalized.json()
       << ",\"agreement\":" << fg.agreement << ",\"pass\":" << (fg.pass ? "true" : "false")
       << "}";
    return os.str();
}

std::string hypothesis_report_json(const HypothesisReport& hr) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < hr.items.size(); ++i) {
        const auto& c = hr.items[i];
        if (i) os << ",";
        os << "{\"name\":\"" << c.name << "\",\"checked\":" << (c.checked ? "true" : "false")
           << ",\"pass\":" << (c.pass ? "true" : "false") << ",\"note\":\"" << c.note
           << "\"}";
    }
    os << "]";
    return os.str();
}

std::string pgz_report_text(const PgzValue& v, const std::string& curve, long disc) {
    std::ostringstream os;
    os << "Heegner point logarithm: curve " << curve << ", disc = " << disc << "\n";
    os << "  multiple used      m = " << v.multiple << (v.torsion ? " (torsion)" : "") << "\n";
    os << "  formal log         = " << v.log_value.to_string() << "\n";
    os << "  " << v.label << " = " << v.value.to_string() << "\n";
    os << "  normalization: Neron differential of the minimal model, Manin constant 1\n";
    return os.str();
}

std::string pgz_report_json(const PgzValue& v, const std::string& curve, long disc) {
    std::ostringstream os;
    os << "{\"curve\":\"" << curve << "\",\"disc\":" << disc << ",\"multiple\":" << v.multiple
       << ",\"torsion\":" << (v.torsion ? "true" : "false")
       << ",\"formal_log\":" << v.log_value.json() << ",\"value\":" << v.value.json()
       << ",\"label\":\"" << v.label << "\"}";
    return os.str();
}

int exit_code_for(bool preconditions_ok, bool all_pass) {
    if (!preconditions_ok) return 2;
    return all_pass ? 0 : 1;
}

} // namespace ezheeg
