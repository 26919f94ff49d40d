# Command groups of the cutjoin CLI
