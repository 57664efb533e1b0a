// Walks the motivating example end to end: a degree-five product against a
// degree-four one, decided three ways (matching, accelerated matching, and
// the peeling recursion), with the witness and the recursion trail printed.

#include <iostream>

#include <branchlaw/branchlaw.hpp>

using namespace branchlaw;

int main() {
    const text::SymbolTable symbols;
    const ArthurTypeRep big = text::parse_rep("u(1,1,3)*u(1,1,1)*u(1,1,1)", symbols);
    const ArthurTypeRep small = text::parse_rep("u(1,1,2)*u(1,2,1)", symbols);

    std::cout << "first side:  " << text::print(big) << "  (dim " << big.dimension()
              << ")\n";
    std::cout << "second side: " << text::print(small) << "  (dim "
              << small.dimension() << ")\n\n";

    const auto witness = relevant(big, small);
    std::cout << "matching decider: " << (witness ? "relevant" : "not relevant")
              << "\n";
    if (witness) {
        for (const auto& [u, v] : witness->p_pairs)
            std::cout << "  pair  " << text::print(v) << " drops a column of "
                      << text::print(u) << "\n";
        for (const auto& [u, v] : witness->q_pairs)
            std::cout << "  pair  " << text::print(u) << " drops a column of "
                      << text::print(v) << "\n";
        for (const SpehRep& u : witness->free_m)
            std::cout << "  free  " << text::print(u) << " on the first side\n";
        for (const SpehRep& v : witness->free_n)
            std::cout << "  free  " << text::print(v) << " on the second side\n";
        std::cout << "  degree balance: " << ext_index_formula_check(*witness) << "\n";
    }

    const auto fast = relevant_fast(big, small);
    std::cout << "accelerated decider: " << (fast ? "relevant" : "not relevant")
              << "\n\n";

    const RecursionOutcome rec = decide_recursive(big, small);
    std::cout << "peeling recursion: " << (rec.relevant ? "relevant" : "not relevant")
              << "\n";
    for (const RecursionStep& s : rec.trace) {
        std::cout << "  case " << s.case_id;
        if (s.removed_m) std::cout << "  removed " << text::print(*s.removed_m);
        if (s.removed_n) std::cout << "  with " << text::print(*s.removed_n);
        if (s.minted) std::cout << "  minted " << text::print(*s.minted);
        std::cout << "\n";
    }
    return 0;
}
