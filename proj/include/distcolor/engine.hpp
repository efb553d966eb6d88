#pragma once

#include "distcolor/graph.hpp"
#include "distcolor/trace.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace distcolor {

// A message is an explicit byte string with a declared bit length. The engine
// accounts the declared length; debug checks ensure it covers the payload.
struct Message {
    std::vector<std::uint8_t> payload;
    long declared_bits = 0;

    static Message from_uint(std::uint64_t value, long bits) {
        Message m;
        m.declared_bits = bits;
        for (long b = 0; b < bits; b += 8) m.payload.push_back(std::uint8_t(value >> b));
        return m;
    }
    std::uint64_t as_uint() const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < payload.size() && i < 8; ++i) v |= std::uint64_t(payload[i]) << (8 * i);
        return v;
    }
};

// Lock-step execution of per-node state machines. Step functions are pure:
// they see the node, its previous state and the inbox from the previous
// round, and produce a new state plus an outbox. Evaluation order within a
// round cannot influence results.
template <class State>
class RoundEngine {
public:
    struct StepResult {
        State state;
        std::vector<std::pair<int, Message>> outbox;  // (neighbor index, message)
        bool halt = false;
    };
    using Inbox = std::vector<std::pair<int, Message>>;  // (sender index, message)
    using StepFn = std::function<StepResult(int node, const State&, const Inbox&)>;

    enum class Stop { AllHalted, MaxRounds };
    struct RunResult {
        std::vector<State> states;
        Stop stop;
    };

    RoundEngine(const SimGraph& g, Model model) : g_(g), trace_(model) {}

    RunResult run(std::vector<State> init, const StepFn& step, long max_rounds) {
        if (int(init.size()) != g_.n()) throw GraphError("engine: one initial state per node required");
        std::vector<char> halted(g_.n(), 0);
        std::vector<Inbox> inbox(g_.n());
        for (long r = 0; r < max_rounds; ++r) {
            bool all_halted = true;
            for (int v = 0; v < g_.n(); ++v)
                if (!halted[v]) all_halted = false;
            if (all_halted) return {std::move(init), Stop::AllHalted};

            std::vector<Inbox> next_inbox(g_.n());
            long max_bits = 0, msgs = 0;
            for (int v = 0; v < g_.n(); ++v) {
                if (halted[v]) continue;
                StepResult res = step(v, init[v], inbox[v]);
                init[v] = std::move(res.state);
                if (res.halt) halted[v] = 1;
                for (auto& [to, msg] : res.outbox) {
                    if (msg.declared_bits < long(msg.payload.size()) * 8 - 7)
                        throw GraphError("declared message length below encoded length");
                    max_bits = std::max(max_bits, msg.declared_bits);
                    ++msgs;
                    next_inbox[to].push_back({v, std::move(msg)});
                }
            }
            // A trailing silent round in which the remaining nodes only halt
            // is not counted: termination itself costs no communication.
            bool now_all_halted = true;
            for (int v = 0; v < g_.n(); ++v)
                if (!halted[v]) now_all_halted = false;
            if (!(msgs == 0 && now_all_halted)) trace_.charge_round(max_bits, msgs);
            inbox = std::move(next_inbox);
        }
        bool all_halted = true;
        for (int v = 0; v < g_.n(); ++v)
            if (!halted[v]) all_halted = false;
        return {std::move(init), all_halted ? Stop::AllHalted : Stop::MaxRounds};
    }

    const MetricsTrace& trace() const { return trace_; }
    MetricsTrace& trace() { return trace_; }

private:
    const SimGraph& g_;
    MetricsTrace trace_;
};

}  // namespace distcolor
