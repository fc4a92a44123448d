// Walks the full pipeline once: parse a regex, build the Thompson NFA,
// determinize, minimize, and print the machine and its DOT rendering.

#include <iostream>

#include <evfa/evfa.hpp>

int main() {
    const evfa::alphabet sigma = evfa::alphabet::of({"a", "b"});
    const evfa::regex_ptr ast = evfa::parse_regex({"(a + b)* . a", sigma});

    std::cout << "expression: " << evfa::print_regex(ast) << "\n";

    const evfa::nfa n = evfa::thompson(ast, sigma);
    std::cout << "thompson states: " << n.states.size() << "\n";

    const evfa::dfa machine = evfa::subset_construct(n);
    std::cout << "subset-construction states: " << machine.state_count() << "\n";

    const evfa::dfa minimal = evfa::hopcroft_minimize(machine);
    std::cout << "minimal states: " << minimal.state_count() << "\n\n";

    std::cout << evfa::serialize_dfa(minimal) << "\n";
    std::cout << evfa::export_dot(minimal, "ends_in_a");
    return 0;
}
