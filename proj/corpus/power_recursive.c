// x to the power y for y >= 0, by repeated squaring.
double power(double x, int y)
{
    if (y == 0) {
        return 1;
    }
    if (y % 2 == 0) {
        return power(x * x, y / 2);
    }
    return x * power(x * x, y / 2);
}
