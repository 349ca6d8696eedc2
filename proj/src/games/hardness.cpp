#include "hardness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <json.hpp>

#include "../error.hpp"

namespace menuprobe::games {

std::string subset_type_id(const std::vector<int>& subset_zero_based) {
    std::string id = "{";
    for (size_t i = 0; i < subset_zero_based.size(); ++i) {
        if (i) id += ",";
        id += std::to_string(subset_zero_based[i] + 1);
    }
    return id + "}";
}

namespace {

void enumerate_subsets(int m, int size, std::vector<std::vector<int>>& out) {
    std::vector<int> current;
    // Lexicographic enumeration of size-element subsets of {0..m-1}.
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(current.size()) == size) {
            out.push_back(current);
            return;
        }
        for (int i = start; i <= m - (size - static_cast<int>(current.size())); ++i) {
            current.push_back(i);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
}

} // namespace

HardnessExample build_hardness_example(int m, int big_n) {
    if (m < 4 || m % 2 != 0) raise(ErrorCode::InvalidArgument, "build_hardness_example: m must be even, >= 4");
    if (big_n == 0) big_n = 10 * m;
    if (big_n <= m) raise(ErrorCode::InvalidArgument, "build_hardness_example: N must exceed m");
    const double big = static_cast<double>(big_n);
    const int n = m + 2;
    const int special = n - 1;

    std::vector<std::vector<int>> subsets;
    enumerate_subsets(m, m / 2, subsets);

    auto make_type = [&](const std::vector<int>& subset) {
        AgentType t;
        t.id = subset_type_id(subset);
        t.directions.assign(n, Vec(m, 0.0));
        t.intercepts.assign(n, 0.0);
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < m; ++i) t.directions[j][i] = -2.0 / (m - 2);
            t.directions[j][j] = 1.0;
        }
        t.directions[m].assign(m, -1.0 / (big * big * big));
        Vec v(m, -big); // 1 on the subset, -N elsewhere; all -N for the empty set
        for (int i : subset) v[i] = 1.0;
        t.directions[special] = scale(v, 1.0 / (big * big));
        return t;
    };

    std::vector<AgentType> types;
    std::vector<Strategy> items;
    for (const auto& s : subsets) {
        types.push_back(make_type(s));
        Vec x(m, 0.0);
        for (int i : s) x[i] = 2.0 / m;
        items.push_back(Strategy{std::move(x)});
    }
    types.push_back(make_type({})); // the empty-set type, last

    nlohmann::json meta{{"hardness", nlohmann::json{{"m", m}, {"N", big_n}}}};
    HardnessExample h{GameInstance(StrategySpace::simplex(m), std::move(types), GameClass::Stackelberg,
                                   std::move(meta)),
                      Menu::finite(std::move(items)), special};
    return h;
}

learn::IdentifyResult identify_via_hardness_menu(const HardnessExample& hardness, AgentOracle& agent) {
    const auto& items = hardness.menu.as_finite().items;
    const int subset_count = static_cast<int>(items.size());
    if (hardness.game.num_types() != subset_count + 1)
        raise(ErrorCode::InvalidArgument, "identify_via_hardness_menu: menu and game disagree on type count");

    learn::IdentifyResult out;
    RecordingOracle recorder(agent, out.transcript);
    const FiniteChoice choice = recorder.choose_finite(items);
    if (choice.action == hardness.special_action) {
        if (choice.item_index < 0 || choice.item_index >= subset_count)
            raise(ErrorCode::NoMatch, "identify_via_hardness_menu: unmatched observation");
        out.type_id = hardness.game.types()[choice.item_index].id;
    } else {
        out.type_id = hardness.game.types()[subset_count].id; // the empty-set type
    }
    return out;
}

} // namespace menuprobe::games
