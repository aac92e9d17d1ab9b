"""Simple script to create .env.example file interactively"""

def get_input(prompt, default=None):
    """Get user input with optional default value"""
    if default:
        full_prompt = f"{prompt} (default: {default}): "
    else:
        full_prompt = f"{prompt}: "

    value = input(full_prompt).strip()
    return value if value else default

print("=" * 50)
print("Environment Configuration Setup")
print("=" * 50)
print()

# Generator
print("Generator Configuration:")
seed = get_input("Default seed", "1")
print()

# Logging
print("Logging Configuration:")
log_level = get_input("Log level (DEBUG/INFO/WARNING/ERROR)", "WARNING")
print()

# Size guards
print("Size Guards:")
p2_limit = get_input("Memoryless P2 enumeration limit", "10000")
max_configs = get_input("Expanded arena size limit", "2000000")
print()

# Cross-check output
print("Cross-check Configuration:")
reproducer_dir = get_input("Reproducer directory", "reproducers")
print()

# Create the .env.example file
with open('.env.example', 'w') as f:
    f.write(f"""# Generator
ENARENA_SEED={seed}

# Logging
ENARENA_LOG_LEVEL={log_level}

# Size guards
ENARENA_P2_LIMIT={p2_limit}
ENARENA_MAX_CONFIGS={max_configs}

# Cross-check reproducers
ENARENA_REPRODUCER_DIR={reproducer_dir}
""")

print("✅ Created .env.example file with your configuration")
