#pragma once

#include <memory>
#include <string>

#include "weylstrata/workspace.hpp"

namespace testing_support {

inline weylstrata::Workspace& workspace()
{
    static weylstrata::Workspace ws(WEYLSTRATA_TEST_DATA);
    return ws;
}

inline const weylstrata::TypeContext& ctx(const std::string& type)
{
    return workspace().context(weylstrata::CartanType::parse(type));
}

inline std::shared_ptr<weylstrata::GroupContext> group(const std::string& type)
{
    auto rs = std::make_shared<weylstrata::RootSystem>(weylstrata::CartanType::parse(type));
    return std::make_shared<weylstrata::GroupContext>(rs);
}

} // namespace testing_support
