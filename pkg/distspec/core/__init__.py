# distspec core: configuration, errors, worker pool and cache
