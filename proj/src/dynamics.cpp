namespace lieb {}
