#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace distcolor {

struct CongestViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// LOCAL = unbounded messages; CONGEST = per-edge per-round bit budget.
struct Model {
    enum Kind { LOCAL, CONGEST } kind = LOCAL;
    long bit_budget = 0;  // per edge per round, CONGEST only
    bool strict = false;  // abort on violation instead of recording it

    static Model local() { return {LOCAL, 0, false}; }
    static Model congest(long budget, bool strict = false) { return {CONGEST, budget, strict}; }
};

// Round and message-size accounting for one algorithm run. Message lengths
// are declared bit lengths; the engine records the per-round maximum.
class MetricsTrace {
public:
    explicit MetricsTrace(Model model = Model::local()) : model_(model) {}

    const Model& model() const { return model_; }

    void charge_round(long max_bits_this_round, long messages) {
        ++rounds_;
        total_messages_ += messages;
        if (max_bits_this_round > max_message_bits_) max_message_bits_ = max_bits_this_round;
        // keep a bounded prefix; counters above stay exact for long runs
        if (round_bits_.size() < 65536) round_bits_.push_back(max_bits_this_round);
        if (model_.kind == Model::CONGEST && max_bits_this_round > model_.bit_budget) {
            ++budget_violations_;
            if (model_.strict)
                throw CongestViolation("CONGEST budget exceeded: " + std::to_string(max_bits_this_round) +
                                       " > " + std::to_string(model_.bit_budget) + " bits");
        }
    }

    void charge_rounds(long k, long max_bits, long messages_per_round) {
        for (long i = 0; i < k; ++i) charge_round(max_bits, messages_per_round);
    }

    long rounds() const { return rounds_; }
    long total_messages() const { return total_messages_; }
    long max_message_bits() const { return max_message_bits_; }
    long budget_violations() const { return budget_violations_; }
    const std::vector<long>& round_bits() const { return round_bits_; }

    struct Span {
        std::string name;
        long begin_round, end_round;
    };
    void begin_span(const std::string& name) { open_.push_back({name, rounds_, -1}); }
    void end_span() {
        Span s = open_.back();
        open_.pop_back();
        s.end_round = rounds_;
        spans_.push_back(s);
    }
    const std::vector<Span>& spans() const { return spans_; }

private:
    Model model_;
    long rounds_ = 0;
    long total_messages_ = 0;
    long max_message_bits_ = 0;
    long budget_violations_ = 0;
    std::vector<long> round_bits_;
    std::vector<Span> spans_, open_;
};

// RAII span annotation.
class TraceSpan {
public:
    TraceSpan(MetricsTrace& t, const std::string& name) : t_(t) { t_.begin_span(name); }
    ~TraceSpan() { t_.end_span(); }

private:
    MetricsTrace& t_;
};

}  // namespace distcolor
