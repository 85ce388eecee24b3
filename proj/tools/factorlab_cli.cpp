// Placeholder main; the full CLI lands with the checker module.
int main() { return 0; }
