#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hdg {

/* A replayable counterexample: which law failed, on which argument tuple,
 * and the two element values that were expected to agree. */
struct Witness {
    std::string axiom;
    std::vector<std::uint32_t> args;
    std::string lhs;
    std::string rhs;
};

struct AxiomStatus {
    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;   // argument tuples evaluated
    std::uint64_t failures = 0;  // tuples that violated the law (witnesses are capped, this is not)
};

/* Verification outcome for one structure. Empty witness list <=> PASS. */
struct StructureReport {
    std::string structure;
    std::vector<AxiomStatus> axioms;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;  // orientation resolutions, paper-typo assumptions exercised

    static constexpr std::size_t kWitnessCap = 16;

    bool pass() const { return witnesses.empty(); }

    AxiomStatus& axiom(const std::string& name) {
        for (auto& a : axioms)
            if (a.name == name) return a;
        axioms.push_back({name, true, 0, 0});
        return axioms.back();
    }

    void fail(const std::string& axiom_name, std::vector<std::uint32_t> args, std::string lhs,
              std::string rhs) {
        auto& st = axiom(axiom_name);
        st.pass = false;
        ++st.failures;
        if (witnesses.size() < kWitnessCap)
            witnesses.push_back({axiom_name, std::move(args), std::move(lhs), std::move(rhs)});
    }

    void note(std::string n) { notes.push_back(std::move(n)); }

    void merge(const StructureReport& other) {
        for (const auto& a : other.axioms) {
            auto& mine = axiom(a.name);
            mine.pass = mine.pass && a.pass;
            mine.checked += a.checked;
            mine.failures += a.failures;
        }
        for (const auto& w : other.witnesses)
            if (witnesses.size() < kWitnessCap) witnesses.push_back(w);
        for (const auto& n : other.notes) notes.push_back(n);
    }
};

}  // namespace hdg
