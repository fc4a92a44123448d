// Classifies a couple of classroom session traces against the built-in
// models and prints the verdict details.

#include <iostream>

#include <evfa/evfa.hpp>

namespace {

void report(const evfa::classroom_model& model, const evfa::word& trace) {
    const evfa::trace_verdict verdict = evfa::classify_trace(model, trace);
    std::cout << evfa::to_string(model.id) << " | " << evfa::to_string(trace) << "\n";
    std::cout << "  " << (verdict.accepted ? "ACCEPT" : "REJECT");
    if (verdict.failure_offset) std::cout << ", hopeless from event " << *verdict.failure_offset;
    std::cout << ", " << verdict.query_count << " query event(s)\n";
}

}  // namespace

int main() {
    const evfa::classroom_model simple = evfa::simple_model();
    const evfa::classroom_model emotional = evfa::emotional_model();

    report(simple, evfa::make_word({"Deliver_Lecture", "Ask_Queries", "Response_Queries",
                                    "Understand_Lecture"}));
    report(simple, evfa::make_word({"Understand_Lecture", "Understand_Lecture"}));
    report(emotional, evfa::make_word({"Understand_Lecture", "Understand_Lecture", "Give_Respect"}));

    const evfa::student_profile profile = evfa::profile_student(
        "demo_student",
        {{evfa::classroom_model_id::simple,
          evfa::make_word({"Deliver_Lecture", "Ask_Queries", "Response_Queries",
                           "Understand_Lecture"})},
         {evfa::classroom_model_id::simple, evfa::make_word({"Deliver_Lecture"})}});
    const evfa::rational rate = profile.mean_query_rate();
    std::cout << "profile: " << profile.sessions << " session(s), " << profile.accepted_simple
              << " accepted, query rate " << rate.numerator << "/" << rate.denominator << "\n";
    return 0;
}
