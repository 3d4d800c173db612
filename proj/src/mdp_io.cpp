// Copyright 2026 The IRL Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irl/mdp_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace irl {

namespace {

using nlohmann::json;

std::vector<std::vector<std::vector<double>>> dense_transitions(const MdpModel& mdp) {
    std::vector<std::vector<std::vector<double>>> p(
        mdp.n_states(), std::vector<std::vector<double>>(mdp.n_actions(),
                                                         std::vector<double>(mdp.n_states(), 0.0)));
    for (int s = 0; s < mdp.n_states(); ++s)
        for (int a = 0; a < mdp.n_actions(); ++a)
            for (const auto& e : mdp.row(s, a)) p[s][a][e.next_state] = e.prob;
    return p;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw std::invalid_argument("trajectory file: empty integer token");
        out.push_back(std::stoi(token));
    }
    return out;
}

}  // namespace

std::string mdp_to_json(const MdpModel& mdp) {
    json doc;
    doc["n_states"] = mdp.n_states();
    doc["n_actions"] = mdp.n_actions();
    doc["transition"] = dense_transitions(mdp);
    std::vector<std::vector<double>> features(mdp.n_states());
    for (int s = 0; s < mdp.n_states(); ++s) {
        const auto f = mdp.features(s);
        features[s].assign(f.begin(), f.end());
    }
    doc["features"] = features;
    doc["initial_dist"] = std::vector<double>(mdp.initial_dist().begin(), mdp.initial_dist().end());
    doc["discount"] = mdp.discount();
    doc["terminal_states"] = mdp.terminal_states();
    doc["features_normalized"] = mdp.features_normalized();
    return doc.dump(2);
}

MdpModel mdp_from_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("mdp_from_json: parse error: ") + e.what());
    }
    try {
        return MdpModel(doc.at("n_states").get<int>(), doc.at("n_actions").get<int>(),
                        doc.at("transition").get<std::vector<std::vector<std::vector<double>>>>(),
                        doc.at("features").get<std::vector<std::vector<double>>>(),
                        doc.at("initial_dist").get<std::vector<double>>(),
                        doc.at("discount").get<double>(),
                        doc.value("terminal_states", std::vector<int>{}),
                        doc.value("features_normalized", false));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("mdp_from_json: bad document: ") + e.what());
    }
}

void save_mdp(const MdpModel& mdp, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_mdp: cannot open " + path);
    out << mdp_to_json(mdp) << '\n';
}

MdpModel load_mdp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_mdp: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return mdp_from_json(buffer.str());
}

std::string trajectories_to_text(const std::vector<Trajectory>& trajectories) {
    std::ostringstream out;
    for (const auto& t : trajectories) {
        for (std::size_t i = 0; i < t.states.size(); ++i)
            out << (i ? "," : "") << t.states[i];
        if (!t.actions.empty()) {
            out << '|';
            for (std::size_t i = 0; i < t.actions.size(); ++i)
                out << (i ? "," : "") << t.actions[i];
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Trajectory> trajectories_from_text(const std::string& text, const MdpModel& mdp) {
    std::vector<Trajectory> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        const auto bar = line.find('|');
        std::vector<int> states = parse_int_list(line.substr(0, bar));
        std::vector<int> actions =
            bar == std::string::npos ? std::vector<int>{} : parse_int_list(line.substr(bar + 1));
        out.push_back(make_trajectory(std::move(states), std::move(actions), mdp));
    }
    return out;
}

void save_trajectories(const std::vector<Trajectory>& trajectories, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_trajectories: cannot open " + path);
    out << trajectories_to_text(trajectories);
}

std::vector<Trajectory> load_trajectories(const std::string& path, const MdpModel& mdp) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_trajectories: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return trajectories_from_text(buffer.str(), mdp);
}

}  // namespace irl
