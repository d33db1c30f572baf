#include "semcp/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace semcp {

using nlohmann::json;

BanditDataset::BanditDataset(std::vector<Column> schema, int action_count, std::string env_label)
    : schema_(std::move(schema)), action_count_(action_count), env_label_(std::move(env_label)) {
    if (action_count_ < 1) throw Error("action count must be >= 1");
    columns_.resize(schema_.size());
}

void BanditDataset::reserve(std::size_t n) {
    for (auto& c : columns_) c.reserve(n);
    actions_.reserve(n);
    rewards_.reserve(n);
}

void BanditDataset::add_row(const std::vector<double>& context, int action, double reward) {
    if (context.size() != schema_.size()) throw Error("row width does not match schema");
    if (action < 0 || action >= action_count_) throw Error("action index out of range");
    for (std::size_t j = 0; j < context.size(); ++j) columns_[j].push_back(context[j]);
    actions_.push_back(action);
    rewards_.push_back(reward);
}

std::size_t BanditDataset::column_index(const std::string& name) const {
    for (std::size_t j = 0; j < schema_.size(); ++j)
        if (schema_[j].name == name) return j;
    throw Error("no column named '" + name + "'");
}

bool BanditDataset::has_column(const std::string& name) const {
    return std::any_of(schema_.begin(), schema_.end(),
                       [&](const Column& c) { return c.name == name; });
}

const std::vector<double>& BanditDataset::column(const std::string& name) const {
    return columns_[column_index(name)];
}

void BanditDataset::set_propensities(std::vector<double> per_action) {
    if (per_action.size() != static_cast<std::size_t>(action_count_))
        throw Error("propensity vector size must equal action count");
    propensities_ = std::move(per_action);
}

double BanditDataset::propensity(int action) const {
    if (propensities_.empty()) return 1.0 / action_count_;
    return propensities_[static_cast<std::size_t>(action)];
}

BanditDataset BanditDataset::subset(const std::vector<std::size_t>& rows) const {
    BanditDataset out(schema_, action_count_, env_label_);
    out.propensities_ = propensities_;
    out.normalization_ = normalization_;
    out.reserve(rows.size());
    std::vector<double> ctx(schema_.size());
    for (std::size_t r : rows) {
        for (std::size_t j = 0; j < schema_.size(); ++j) ctx[j] = columns_[j][r];
        out.add_row(ctx, actions_[r], rewards_[r]);
    }
    return out;
}

namespace {

json affine_to_json(const ColumnAffine& a) {
    return json{{"offset", a.offset}, {"scale", a.scale}, {"constant", a.constant}};
}

ColumnAffine affine_from_json(const json& j) {
    ColumnAffine a;
    a.offset = j.at("offset").get<double>();
    a.scale = j.at("scale").get<double>();
    a.constant = j.at("constant").get<bool>();
    return a;
}

std::string kind_name(ColumnKind k) {
    switch (k) {
    case ColumnKind::Continuous: return "cont";
    case ColumnKind::Binary: return "bin";
    case ColumnKind::Categorical: return "cat";
    }
    return "cont";
}

ColumnKind kind_from_name(const std::string& s) {
    if (s == "cont") return ColumnKind::Continuous;
    if (s == "bin") return ColumnKind::Binary;
    if (s == "cat") return ColumnKind::Categorical;
    throw Error("unknown column kind '" + s + "'");
}

} // namespace

void BanditDataset::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out.precision(17);
    for (std::size_t j = 0; j < schema_.size(); ++j) out << schema_[j].name << ",";
    out << "action,reward\n";
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t j = 0; j < schema_.size(); ++j) out << columns_[j][r] << ",";
        out << actions_[r] << "," << rewards_[r] << "\n";
    }

    json side;
    side["environment"] = env_label_;
    side["action_count"] = action_count_;
    json cols = json::array();
    for (const auto& c : schema_)
        cols.push_back(json{{"name", c.name}, {"kind", kind_name(c.kind)}, {"arity", c.arity}});
    side["schema"] = cols;
    if (!propensities_.empty()) side["propensities"] = propensities_;
    if (normalization_) {
        json norm;
        json nc = json::array();
        for (const auto& a : normalization_->columns) nc.push_back(affine_to_json(a));
        norm["columns"] = nc;
        norm["reward"] = affine_to_json(normalization_->reward);
        side["normalization"] = norm;
    }
    std::ofstream sout(path + ".json");
    if (!sout) throw Error("cannot write '" + path + ".json'");
    sout << side.dump(2) << "\n";
}

BanditDataset BanditDataset::read_csv(const std::string& path) {
    std::ifstream sin(path + ".json");
    if (!sin) throw Error("missing sidecar '" + path + ".json'");
    json side = json::parse(sin);

    std::vector<Column> schema;
    for (const auto& c : side.at("schema")) {
        Column col;
        col.name = c.at("name").get<std::string>();
        col.kind = kind_from_name(c.at("kind").get<std::string>());
        col.arity = c.at("arity").get<int>();
        schema.push_back(col);
    }
    BanditDataset ds(schema, side.at("action_count").get<int>(),
                     side.at("environment").get<std::string>());
    if (side.contains("propensities"))
        ds.set_propensities(side.at("propensities").get<std::vector<double>>());
    if (side.contains("normalization")) {
        NormalizationRecord rec;
        for (const auto& a : side.at("normalization").at("columns"))
            rec.columns.push_back(affine_from_json(a));
        rec.reward = affine_from_json(side.at("normalization").at("reward"));
        ds.set_normalization(rec);
    }

    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw Error("empty csv '" + path + "'");
    std::vector<double> ctx(schema.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        for (std::size_t j = 0; j < schema.size(); ++j) {
            if (!std::getline(ls, cell, ',')) throw Error("short row in '" + path + "'");
            ctx[j] = std::stod(cell);
        }
        if (!std::getline(ls, cell, ',')) throw Error("short row in '" + path + "'");
        int action = std::stoi(cell);
        if (!std::getline(ls, cell, ',')) throw Error("short row in '" + path + "'");
        ds.add_row(ctx, action, std::stod(cell));
    }
    return ds;
}

namespace {

ColumnAffine fit_affine(double lo, double hi) {
    ColumnAffine a;
    if (hi - lo < 1e-300) {
        a.offset = lo;
        a.scale = 1.0;
        a.constant = true;
    } else {
        a.offset = lo;
        a.scale = hi - lo;
    }
    return a;
}

void apply_affine(std::vector<double>& v, const ColumnAffine& a) {
    for (auto& x : v) x = (x - a.offset) / a.scale;
}

} // namespace

NormalizationRecord normalize(std::vector<BanditDataset>& train, std::vector<BanditDataset*> others) {
    if (train.empty()) throw Error("normalize: no training datasets");
    const auto& schema = train[0].schema();
    for (const auto& ds : train)
        if (ds.schema().size() != schema.size()) throw Error("normalize: schema mismatch");

    NormalizationRecord rec;
    rec.columns.resize(schema.size());
    for (std::size_t j = 0; j < schema.size(); ++j) {
        if (schema[j].kind != ColumnKind::Continuous) continue; // already coded in {0..k-1}/{0,1}
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& ds : train)
            for (double x : ds.column(j)) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        rec.columns[j] = fit_affine(lo, hi);
    }
    {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& ds : train)
            for (double y : ds.rewards()) {
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
        rec.reward = fit_affine(lo, hi);
    }

    for (auto& ds : train) apply_normalization(ds, rec);
    for (auto* ds : others) apply_normalization(*ds, rec);
    return rec;
}

void apply_normalization(BanditDataset& ds, const NormalizationRecord& rec) {
    if (ds.normalized()) throw Error("dataset already normalized");
    if (rec.columns.size() != ds.column_count()) throw Error("normalization record width mismatch");
    for (std::size_t j = 0; j < ds.column_count(); ++j) {
        if (ds.schema()[j].kind != ColumnKind::Continuous) continue;
        apply_affine(ds.mutable_column(j), rec.columns[j]);
    }
    apply_affine(ds.mutable_rewards(), rec.reward);
    ds.set_normalization(rec);
}

std::vector<double> denormalize(const std::vector<double>& values, const ColumnAffine& affine) {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out[i] = values[i] * affine.scale + affine.offset;
    return out;
}

} // namespace semcp
