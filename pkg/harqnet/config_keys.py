class ConfigKeys:
    BASE_PARAMS = "base_params"
    CONFIGPATH = "config_path"
    DEFINITIONS = "definitions"
    LAMBDA_DENSITY = "lambda_density"
