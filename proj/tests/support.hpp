#pragma once

#include "saturn/kb_io.hpp"
#include "saturn/query_engine.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace test_support
{

    inline std::string data_path(const std::string &name)
    {
        return std::string(SATURN_TEST_DATA_DIR) + "/" + name;
    }

    inline std::string read_text(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open " + path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    inline saturn::QueryFile load(const std::string &name)
    {
        return saturn::parse_query_file(read_text(data_path(name)));
    }

    /// Parses a single statement as a [kb] clause.
    inline saturn::Clause clause(const std::string &text)
    {
        auto file = saturn::parse_query_file("[kb]\n" + text + "\n[question]\nzz_unused\n");
        if (file.kb.size() != 1)
            throw std::runtime_error("expected one clause from: " + text);
        return file.kb.front();
    }

    inline saturn::QueryOptions steps_options(std::size_t steps, saturn::Rational split = saturn::Rational(1, 2),
                                              saturn::Rational h = saturn::Rational(1, 2))
    {
        saturn::QueryOptions o;
        o.budget.steps = steps;
        o.budget.split = split;
        o.h = h;
        return o;
    }

    // Options for comparing against the ground oracle. Over at most 12 ground
    // atoms a factored clause never needs more than 12 ordinary literals, so
    // the literal cap can shrink to that plus the answer literals.
    inline saturn::QueryOptions oracle_options(std::size_t steps)
    {
        saturn::QueryOptions o = steps_options(steps, 1);
        o.limits.max_clause_literals = 12 + o.limits.max_answer_literals;
        return o;
    }

    inline const saturn::AnswerRecord *find_record(const saturn::QueryResult &r, const std::string &value)
    {
        for (const auto &rec : r.records)
            if (!rec.indefinite && rec.values.size() == 1 && saturn::to_string(rec.values[0]) == value)
                return &rec;
        return nullptr;
    }

} // namespace test_support
